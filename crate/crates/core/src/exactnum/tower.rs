use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;

use super::element::FieldElement;
use crate::error::{Error, Result};

/// A generator `g` with `g^2 = square`, `square` taken over the generators
/// declared before it. Coefficients are indexed by monomial bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub square: Vec<BigRational>,
}

/// A tower of real quadratic extensions `Q ⊂ Q(g_1) ⊂ ... ⊂ Q(g_1, ..., g_k)`.
///
/// Elements are stored on the `2^k` basis of square-free generator products,
/// with bit `i` of the monomial index standing for generator `i`. Construction
/// rejects any generator whose square root already lies in the lower field, so
/// that basis is linearly independent and an element is zero exactly when all
/// of its coefficients are.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tower {
    gens: Vec<Generator>,
}

impl Tower {
    /// The trivial tower (the rationals).
    pub fn rationals() -> Arc<Tower> {
        Arc::new(Tower::default())
    }

    /// Builds a tower from `(name, square)` declarations, each square written
    /// as an expression in the previously declared generators.
    pub fn from_decls<S: AsRef<str>>(decls: &[(S, S)]) -> Result<Arc<Tower>> {
        let mut tower = Tower::rationals();
        for (name, square) in decls {
            let sq = FieldElement::parse(&tower, square.as_ref())?;
            tower = tower.extend(name.as_ref(), &sq)?;
        }
        Ok(tower)
    }

    /// Adjoins the positive square root of `square` (an element of this tower).
    pub fn extend(self: &Arc<Self>, name: &str, square: &FieldElement) -> Result<Arc<Tower>> {
        if !square.tower().same_as(self) {
            return Err(Error::TowerMismatch);
        }
        if !valid_name(name) {
            return Err(Error::Tower(format!("invalid generator name `{name}`")));
        }
        if self.index_of(name).is_some() {
            return Err(Error::Tower(format!("duplicate generator `{name}`")));
        }
        if self.gens.len() >= 16 {
            return Err(Error::Tower("at most 16 generators are supported".into()));
        }
        if square.signum() <= 0 {
            return Err(Error::Tower(format!(
                "square of `{name}` must be positive, got {square}"
            )));
        }
        if square.sqrt_in_field()?.is_some() {
            return Err(Error::Tower(format!(
                "`{name}` = sqrt({square}) already lies in the field"
            )));
        }
        let mut gens = self.gens.clone();
        gens.push(Generator {
            name: name.to_string(),
            square: square.coeffs().to_vec(),
        });
        Ok(Arc::new(Tower { gens }))
    }

    /// `Q(√3, 3^{1/4}, √2, √5, √7, √11)`: every coordinate of the published
    /// constructions except the golden pentagon lives here.
    pub fn paper() -> Arc<Tower> {
        static T: OnceLock<Arc<Tower>> = OnceLock::new();
        T.get_or_init(|| {
            Tower::from_decls(&[
                ("s3", "3"),
                ("q3", "s3"),
                ("s2", "2"),
                ("s5", "5"),
                ("s7", "7"),
                ("s11", "11"),
            ])
            .expect("paper tower is valid")
        })
        .clone()
    }

    /// `Q(√3, √11)`, home of the lattice points `[a, b, c, d]`.
    pub fn lattice() -> Arc<Tower> {
        static T: OnceLock<Arc<Tower>> = OnceLock::new();
        T.get_or_init(|| {
            Tower::from_decls(&[("s3", "3"), ("s11", "11")]).expect("lattice tower is valid")
        })
        .clone()
    }

    pub fn depth(&self) -> usize {
        self.gens.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub(crate) fn square_of(&self, level: usize) -> &[BigRational] {
        &self.gens[level].square
    }

    pub fn same_as(&self, other: &Tower) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    /// The generator itself as an element.
    pub fn generator(self: &Arc<Self>, name: &str) -> Result<FieldElement> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
        let mut c = vec![BigRational::zero(); self.dim()];
        c[1 << i] = BigRational::from_integer(1.into());
        Ok(FieldElement::from_parts(self.clone(), c))
    }

    /// Whether every generator of `self` appears in `other` with an equal square,
    /// i.e. `self` embeds in `other` by generator names.
    pub fn embeds_in(&self, other: &Tower) -> bool {
        self.name_map(other).is_ok()
    }

    /// Source generator index -> target generator index.
    pub(crate) fn name_map(&self, other: &Tower) -> Result<Vec<usize>> {
        let mut map = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let j = other
                .index_of(&g.name)
                .ok_or_else(|| Error::Tower(format!("`{}` missing from target tower", g.name)))?;
            // the square of g_i, pushed through the map built so far
            let mut mapped = vec![BigRational::zero(); other.dim()];
            for (m, c) in g.square.iter().enumerate() {
                if !c.is_zero() {
                    mapped[remap(m, &map)] = c.clone();
                }
            }
            let target_sq = other.square_of(j);
            let matches = mapped
                .iter()
                .enumerate()
                .all(|(m, c)| c == target_sq.get(m).unwrap_or(&BigRational::zero()));
            if !matches {
                return Err(Error::Tower(format!(
                    "generator `{}` has a different square in the target tower",
                    g.name
                )));
            }
            map.push(j);
        }
        Ok(map)
    }

    /// A name not yet used by any generator, preferring `preferred`.
    pub fn fresh_name(&self, preferred: &str) -> String {
        if self.index_of(preferred).is_none() && valid_name(preferred) {
            return preferred.to_string();
        }
        (1..)
            .map(|k| format!("x{k}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }

    /// The canonical declaration list, e.g. `[("s3", "(3)*1"), ("q3", "(1)*s3")]`.
    pub fn decls(self: &Arc<Self>) -> Vec<(String, String)> {
        self.gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let lower = Arc::new(Tower {
                    gens: self.gens[..i].to_vec(),
                });
                let sq = FieldElement::from_parts(lower, g.square.clone());
                (g.name.clone(), sq.to_string())
            })
            .collect()
    }
}

pub(crate) fn remap(m: usize, map: &[usize]) -> usize {
    let mut out = 0;
    for (i, &j) in map.iter().enumerate() {
        if m >> i & 1 == 1 {
            out |= 1 << j;
        }
    }
    out
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q")?;
        for g in &self.gens {
            write!(f, "({})", g.name)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_dependent_generator() {
        let t = Tower::from_decls(&[("s2", "2")]).unwrap();
        let two = FieldElement::from_int(&t, 2);
        assert!(matches!(t.extend("r2", &two), Err(Error::Tower(_))));
        let eight = FieldElement::from_int(&t, 8);
        assert!(t.extend("r8", &eight).is_err());
        let six = FieldElement::from_int(&t, 6);
        assert!(t.extend("s6", &six).is_ok());
    }

    #[test]
    fn rejects_negative_and_duplicate() {
        let t = Tower::from_decls(&[("s2", "2")]).unwrap();
        assert!(t.extend("i", &FieldElement::from_int(&t, -1)).is_err());
        assert!(t.extend("s2", &FieldElement::from_int(&t, 3)).is_err());
        assert!(t.extend("9x", &FieldElement::from_int(&t, 3)).is_err());
    }

    #[test]
    fn quartic_root_of_three_stacks() {
        let t = Tower::from_decls(&[("s3", "3"), ("q3", "s3")]).unwrap();
        assert_eq!(t.dim(), 4);
        // sqrt(3) over Q(3^{1/4}) is already present
        let s3 = t.generator("s3").unwrap();
        assert!(t.extend("r", &s3).is_err());
    }

    #[test]
    fn paper_tower_shape() {
        let t = Tower::paper();
        assert_eq!(t.dim(), 64);
        assert_eq!(t.index_of("s11"), Some(5));
    }

    #[test]
    fn embedding_by_names() {
        let small = Tower::from_decls(&[("s3", "3")]).unwrap();
        assert!(small.embeds_in(&Tower::paper()));
        let other = Tower::from_decls(&[("s3", "5")]).unwrap();
        assert!(!other.embeds_in(&Tower::paper()));
    }

    #[test]
    fn decls_round_trip() {
        let t = Tower::from_decls(&[("s3", "3"), ("q3", "s3"), ("s2", "2")]).unwrap();
        let decls = t.decls();
        assert_eq!(decls[1], ("q3".to_string(), "(1)*s3".to_string()));
        let again = Tower::from_decls(&decls).unwrap();
        assert_eq!(*again, *t);
    }
}
