//! Checked-in reference data: the first five matrices, the first rows of the
//! triangle and the worked bijection pair.

use std::fs;
use std::path::Path;

use crate::delta::DeltaMatrix;
use crate::poupard::Triangle;
use crate::trees::Tree;
use crate::{Error, Result};

const EMBEDDED: [(&str, &str); 7] = [
    ("m1.json", include_str!("../fixtures/m1.json")),
    ("m2.json", include_str!("../fixtures/m2.json")),
    ("m3.json", include_str!("../fixtures/m3.json")),
    ("m4.json", include_str!("../fixtures/m4.json")),
    ("m5.json", include_str!("../fixtures/m5.json")),
    ("triangle.json", include_str!("../fixtures/triangle.json")),
    ("bijection.txt", include_str!("../fixtures/bijection.txt")),
];

pub const MATRIX_COUNT: usize = 5;

#[derive(Clone, Debug)]
pub struct Golden {
    pub matrices: Vec<DeltaMatrix>,
    pub triangle: Triangle,
    pub bijection: (Tree, Tree),
}

impl Golden {
    pub fn embedded() -> Result<Self> {
        Golden::parse(|name| Ok(embedded(name).to_owned()))
    }

    /// Reads fixtures from `dir`, falling back to the embedded copy for any
    /// file that is absent.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        if !dir.is_dir() {
            return Err(Error::Parse(format!("fixture directory {} not found", dir.display())));
        }
        Golden::parse(|name| {
            let path = dir.join(name);
            if path.exists() {
                fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
            } else {
                Ok(embedded(name).to_owned())
            }
        })
    }

    fn parse(read: impl Fn(&str) -> Result<String>) -> Result<Self> {
        let mut matrices = Vec::with_capacity(MATRIX_COUNT);
        for n in 1..=MATRIX_COUNT {
            let name = format!("m{n}.json");
            let m = DeltaMatrix::from_json(&read(&name)?).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
            if m.n() != n {
                return Err(Error::Parse(format!("{name} holds n = {}", m.n())));
            }
            matrices.push(m);
        }
        let triangle = Triangle::from_json(&read("triangle.json")?)?;
        let text = read("bijection.txt")?;
        let trees: Vec<Tree> = text.lines().filter(|l| !l.trim().is_empty()).map(str::parse).collect::<Result<_>>()?;
        let [left, right]: [Tree; 2] =
            trees.try_into().map_err(|_| Error::Parse("bijection.txt must hold exactly two trees".into()))?;
        Ok(Golden { matrices, triangle, bijection: (left, right) })
    }

    pub fn fixture_names() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(name, _)| *name)
    }
}

fn embedded(name: &str) -> &'static str {
    EMBEDDED.iter().find(|(n, _)| *n == name).map(|(_, text)| *text).unwrap_or("")
}
