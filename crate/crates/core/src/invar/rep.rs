//! Matrix models of the two linear actions the invariant-theory checks run
//! over, loaded from the bundled generator files and cross-validated against
//! a character table before anything downstream trusts them.
//!
//! Loading closes the generated matrix group and enforces the declared
//! order, so a corrupted data file cannot materialize. Character validation
//! then matches the trace of one representative per conjugacy class against
//! the rows of an independently computed table. Classes can only be matched
//! up to relabeling inside an (element order, class size) block, because an
//! abstract isomorphism is never chosen; the check therefore compares trace
//! multisets blockwise, which still pins the character up to the Galois
//! twin ambiguity that is genuinely there.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::chars::CharTable;
use crate::cyclo::{Cyclo, Rat};
use crate::groups::{load_bundled_group, ClassData, DataError, Domain, GroupModel};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("bundled data: {0}")]
    Data(#[from] DataError),
    #[error("group '{0}' is not a cyclotomic matrix group")]
    NotMatrices(String),
    #[error("table has no row of degree {dim} whose blockwise trace multisets match")]
    NoMatchingRow { dim: usize },
    #[error("class count mismatch: group has {got}, table has {want}")]
    ClassCount { got: usize, want: usize },
}

/// A closed group of exact cyclotomic matrices together with its class data.
pub struct MatrixRep {
    pub model: GroupModel,
    pub classes: ClassData,
    pub dim: usize,
    pub conductor: u32,
}

impl MatrixRep {
    pub fn load(key: &str) -> Result<MatrixRep, RepError> {
        let model = load_bundled_group(key)?;
        let (dim, conductor) = match model.domain {
            Domain::MatCyc { conductor, dim } => (dim, conductor),
            _ => return Err(RepError::NotMatrices(key.to_string())),
        };
        let classes = ClassData::new(&model);
        Ok(MatrixRep { model, classes, dim, conductor })
    }

    pub fn order(&self) -> usize {
        self.model.order()
    }

    /// Row-major matrix of element `id`, shaped for `MPoly::subst_linear`.
    pub fn rows_of(&self, id: u32) -> Vec<Vec<Cyclo>> {
        match self.model.elem(id) {
            crate::groups::ElemData::MatCyc(v) => {
                (0..self.dim).map(|i| v[i * self.dim..(i + 1) * self.dim].to_vec()).collect()
            }
            _ => unreachable!("load only admits matrix groups"),
        }
    }

    /// The generator matrices in bundled-file order.
    pub fn generator_rows(&self) -> Vec<Vec<Vec<Cyclo>>> {
        self.model.gens.clone().into_iter().map(|id| self.rows_of(id)).collect()
    }

    pub fn trace_of_class(&self, i: usize) -> Cyclo {
        let e = self.model.elem(self.classes.reps[i]);
        self.model.domain.trace_cyclo(e).expect("matrix domain has traces")
    }

    /// Indices of all table rows whose values agree with the trace map of
    /// this matrix group up to class relabeling within (order, size) blocks.
    /// Galois-twin rows are indistinguishable by design, so the result is a
    /// set; an empty set is an error.
    pub fn match_character(&self, table: &CharTable) -> Result<Vec<usize>, RepError> {
        let k = self.classes.num_classes();
        if k != table.num_classes() {
            return Err(RepError::ClassCount { got: k, want: table.num_classes() });
        }
        let traces: Vec<Cyclo> = (0..k).map(|i| self.trace_of_class(i)).collect();
        let mut m = 1u32;
        for t in &traces {
            m = lcm(m, t.conductor());
        }
        for row in &table.rows {
            for v in row {
                m = lcm(m, v.conductor());
            }
        }
        let mine = blockwise(
            (0..k).map(|i| {
                ((self.classes.orders[i], self.classes.sizes[i]), traces[i].clone())
            }),
            m,
        );
        let mut hits = Vec::new();
        for r in 0..table.rows.len() {
            if table.degree(r) != self.dim {
                continue;
            }
            let theirs = blockwise(
                (0..k).map(|i| {
                    ((table.orders[i], table.sizes[i]), table.rows[r][i].clone())
                }),
                m,
            );
            if mine == theirs {
                hits.push(r);
            }
        }
        if hits.is_empty() {
            return Err(RepError::NoMatchingRow { dim: self.dim });
        }
        Ok(hits)
    }
}

/// Blockwise fingerprint: (order, size) -> sorted coordinate vectors after
/// raising every value to the shared conductor `m`. Comparing coordinates
/// rather than printed forms keeps values equal across the different
/// conductors the two sides may have computed in.
fn blockwise(
    it: impl Iterator<Item = ((u32, usize), Cyclo)>,
    m: u32,
) -> BTreeMap<(u32, usize), Vec<Vec<Rat>>> {
    let mut map: BTreeMap<(u32, usize), Vec<Vec<Rat>>> = BTreeMap::new();
    for (key, v) in it {
        map.entry(key).or_default().push(v.sort_key(m));
    }
    for vs in map.values_mut() {
        vs.sort();
    }
    map
}

fn lcm(a: u32, b: u32) -> u32 {
    let gcd = |mut x: u32, mut y: u32| {
        while y != 0 {
            let t = x % y;
            x = y;
            y = t;
        }
        x
    };
    a / gcd(a, b) * b
}

/// The 168-element symmetry group of the plane quartic
/// x1*x2^3 + x2*x3^3 + x3*x1^3, closed once per process.
pub fn klein_rep() -> &'static MatrixRep {
    static CELL: OnceLock<MatrixRep> = OnceLock::new();
    CELL.get_or_init(|| MatrixRep::load("klein168").expect("bundled klein168 data is valid"))
}

/// The 336-element image of SL(2,7) acting on four variables via the even
/// part of its Weil representation, closed once per process.
pub fn weil_rep() -> &'static MatrixRep {
    static CELL: OnceLock<MatrixRep> = OnceLock::new();
    CELL.get_or_init(|| MatrixRep::load("weil336").expect("bundled weil336 data is valid"))
}
