//! Rank-3 structure-constant tensors.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, GaussianRational, Rational};

/// Structure constants `c[k][i][j]` of a bilinear map on an `n`-dimensional
/// space: `e_i ∘ e_j = Σ_k c[k][i][j] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<F> {
    dim: usize,
    data: Vec<F>,
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![F::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    data.push(f(k, i, j));
                }
            }
        }
        Tensor3 { dim, data }
    }

    /// Builds a product from a table of `(i, j) ↦ e_i ∘ e_j` (0-based);
    /// unlisted pairs are zero.
    pub fn from_products<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vector<F>)>,
    {
        let mut t = Self::zeros(dim);
        for ((i, j), v) in entries {
            t.set_product(i, j, &v)?;
        }
        Ok(t)
    }

    /// Builds an antisymmetric bracket from entries `[e_i, e_j]` with `i < j`.
    pub fn antisymmetric_from<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vector<F>)>,
    {
        let mut t = Self::zeros(dim);
        for ((i, j), v) in entries {
            t.set_product(i, j, &v)?;
            t.set_product(j, i, &(-v))?;
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.dim + i) * self.dim + j
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &F {
        &self.data[self.idx(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, value: F) {
        let ix = self.idx(k, i, j);
        self.data[ix] = value;
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: &Vector<F>) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if i >= self.dim || j >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: i.max(j) + 1,
            });
        }
        for k in 0..self.dim {
            self.set(k, i, j, v[k].clone());
        }
        Ok(())
    }

    /// `e_i ∘ e_j`.
    pub fn on_basis(&self, i: usize, j: usize) -> Vector<F> {
        Vector((0..self.dim).map(|k| self.get(k, i, j).clone()).collect())
    }

    /// `u ∘ v = Σ_{i,j} u_i v_j c[·][i][j]`.
    pub fn apply(&self, u: &Vector<F>, v: &Vector<F>) -> Vector<F> {
        assert_eq!(u.len(), self.dim, "tensor argument dimension mismatch");
        assert_eq!(v.len(), self.dim, "tensor argument dimension mismatch");
        let mut out = Vector::zeros(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui.clone() * vj.clone();
                for k in 0..self.dim {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        out[k] += w.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `L_{e_i}`: column `j` is `e_i ∘ e_j`.
    pub fn left_mult(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.get(k, i, j).clone())
    }

    /// Matrix of `L_u` for an arbitrary vector `u`.
    pub fn left_mult_by(&self, u: &Vector<F>) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                m = &m + &self.left_mult(i).scale(ui);
            }
        }
        m
    }

    /// Matrix of right multiplication `R_{e_j}`: column `i` is `e_i ∘ e_j`.
    pub fn right_mult(&self, j: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, i| self.get(k, i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|k| {
            (0..self.dim).all(|i| {
                (i..self.dim).all(|j| *self.get(k, i, j) == -self.get(k, j, i).clone())
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|k| {
            (0..self.dim).all(|i| (i..self.dim).all(|j| self.get(k, i, j) == self.get(k, j, i)))
        })
    }

    /// The opposite product `(u, v) ↦ v ∘ u`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.dim, |k, i, j| self.get(k, j, i).clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    /// The same bilinear map written in the basis given by the columns of
    /// `s`: `c'(x, y) = s⁻¹ c(s x, s y)`.
    pub fn change_basis(&self, s: &Matrix<F>) -> Result<Self> {
        if s.rows() != self.dim || s.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.rows(),
            });
        }
        let s_inv = s.inverse()?;
        let cols: Vec<Vector<F>> = (0..self.dim).map(|i| s.column(i)).collect();
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let w = s_inv.mul_vec(&self.apply(&cols[i], &cols[j]));
                out.set_product(i, j, &w)?;
            }
        }
        Ok(out)
    }

    pub fn map<G: Field, M: Fn(&F) -> G>(&self, f: M) -> Tensor3<G> {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Nonzero products `((i, j), e_i ∘ e_j)` in lexicographic order.
    pub fn nonzero_products(&self) -> Vec<((usize, usize), Vector<F>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.on_basis(i, j);
                if !v.is_zero() {
                    out.push(((i, j), v));
                }
            }
        }
        out
    }
}

impl Tensor3<Rational> {
    pub fn to_gaussian(&self) -> Tensor3<GaussianRational> {
        self.map(|x| GaussianRational::real(x.clone()))
    }
}

impl<F: Field> std::ops::Sub for &Tensor3<F> {
    type Output = Tensor3<F>;
    fn sub(self, rhs: &Tensor3<F>) -> Tensor3<F> {
        assert_eq!(self.dim, rhs.dim);
        Tensor3 {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<F: Field> std::ops::Add for &Tensor3<F> {
    type Output = Tensor3<F>;
    fn add(self, rhs: &Tensor3<F>) -> Tensor3<F> {
        assert_eq!(self.dim, rhs.dim);
        Tensor3 {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

/// Writes a vector as a combination of `e1..en`, e.g. `-2*e1 + 1/2*e3`.
pub fn format_combination<F: Field>(v: &Vector<F>) -> String {
    let mut terms = Vec::new();
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let name = format!("e{}", k + 1);
        if x.is_one() {
            terms.push(name);
        } else if (-x.clone()).is_one() {
            terms.push(format!("-{name}"));
        } else {
            terms.push(format!("{x}*{name}"));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

impl<F: Field> fmt::Display for Tensor3<F> {
    /// One line per nonzero product, 1-based basis names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.nonzero_products();
        if entries.is_empty() {
            return write!(f, "(zero product)");
        }
        for (n, ((i, j), v)) in entries.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "e{}.e{} = {}", i + 1, j + 1, format_combination(v))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Tensor3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3(dim={}) {{ {} }}", self.dim, self.to_string().replace('\n', "; "))
    }
}

/// Serialized sparsely as `[{"i": 1, "j": 2, "coeffs": [...]}, ...]` with
/// 1-based indices, matching the instance-file product format.
impl<F: Field + Serialize> Serialize for Tensor3<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a, F> {
            i: usize,
            j: usize,
            coeffs: &'a Vector<F>,
        }
        let entries = self.nonzero_products();
        let view: Vec<Entry<'_, F>> = entries
            .iter()
            .map(|((i, j), v)| Entry {
                i: i + 1,
                j: j + 1,
                coeffs: v,
            })
            .collect();
        view.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn vecq(xs: &[i64]) -> Vector<Rational> {
        Vector(xs.iter().map(|&x| q(x, 1)).collect())
    }

    #[test]
    fn bilinear_evaluation() {
        let t = Tensor3::from_products(2, vec![((0, 1), vecq(&[1, 2])), ((1, 1), vecq(&[0, 3]))]).unwrap();
        let u = vecq(&[2, 1]);
        let v = vecq(&[0, 5]);
        // u∘v = 2*5 e1∘e2 + 1*5 e2∘e2 = 10(1,2) + 5(0,3)
        assert_eq!(t.apply(&u, &v), vecq(&[10, 35]));
        assert_eq!(t.left_mult(0).column(1), vecq(&[1, 2]));
        assert_eq!(t.right_mult(1).column(0), vecq(&[1, 2]));
    }

    #[test]
    fn antisymmetric_completion() {
        let t = Tensor3::antisymmetric_from(3, vec![((0, 1), vecq(&[0, 0, 1]))]).unwrap();
        assert!(t.is_antisymmetric());
        assert_eq!(t.on_basis(1, 0), vecq(&[0, 0, -1]));
    }

    #[test]
    fn change_basis_round_trip() {
        let t = Tensor3::antisymmetric_from(2, vec![((0, 1), vecq(&[0, 1]))]).unwrap();
        let s = Matrix::from_ints(&[&[1, 1], &[0, 2]]);
        let back = t.change_basis(&s).unwrap().change_basis(&s.inverse().unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn display_table() {
        let t = Tensor3::from_products(3, vec![((1, 0), vecq(&[0, 0, 1])), ((0, 0), vecq(&[1, -2, 0]))]).unwrap();
        assert_eq!(t.to_string(), "e1.e1 = e1 - 2*e2\ne2.e1 = e3");
    }
}
