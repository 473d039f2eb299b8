//! Matrix groups over prime fields, realized as permutation groups on the
//! nonzero row vectors.

use std::collections::HashSet;
use std::sync::Arc;

use crate::arith::{is_prime, pow_mod, primitive_root};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::perm::Perm;

/// Nonzero vectors beyond this count are refused.
const MAX_POINTS: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    p: u64,
    entries: Vec<u64>,
}

impl Matrix {
    /// Rows of integers, reduced mod `p` (negative entries allowed).
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "expected a square matrix, got {rows:?}"
            )));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(p as i64) as u64)
            .collect();
        Ok(Matrix { n, p, entries })
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, p, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (0..n)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum::<u64>()
                    % self.p;
            }
        }
        Matrix {
            n,
            p: self.p,
            entries,
        }
    }

    pub fn det(&self) -> u64 {
        let (n, p) = (self.n, self.p);
        let mut a = self.entries.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = pow_mod(pv, p - 2, p);
            for r in col + 1..n {
                let factor = a[r * n + col] * inv % p;
                for k in col..n {
                    a[r * n + k] = (a[r * n + k] + p * p - factor * a[col * n + k] % p) % p;
                }
            }
        }
        det
    }

    /// `v * M` on coordinate vectors.
    fn act(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| v[i] * self.get(i, j)).sum::<u64>() % self.p)
            .collect()
    }
}

fn decode(code: u64, n: usize, p: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(n);
    let mut c = code;
    for _ in 0..n {
        v.push(c % p);
        c /= p;
    }
    v
}

fn encode(v: &[u64], p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// A matrix group together with its permutation realization.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub n: usize,
    pub p: u64,
    pub matrices: Vec<Matrix>,
    pub group: Arc<FiniteGroup>,
}

impl MatrixGroup {
    /// The permutation of nonzero vectors (point `code - 1`) induced by `m`.
    pub fn perm_of(&self, m: &Matrix) -> Perm {
        matrix_perm(m)
    }

    pub fn element_of(&self, m: &Matrix) -> Option<usize> {
        self.group.index_of(&self.perm_of(m))
    }

    /// Recovers the matrix of a group element from the images of the basis vectors.
    pub fn matrix_of(&self, x: usize) -> Matrix {
        let perm = self.group.element(x);
        let (n, p) = (self.n, self.p);
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            let e_i = p.pow(i as u32);
            let image = perm.apply((e_i - 1) as u32) as u64 + 1;
            entries.extend(decode(image, n, p));
        }
        Matrix { n, p, entries }
    }
}

fn matrix_perm(m: &Matrix) -> Perm {
    let count = m.p.pow(m.n as u32);
    let images = (1..count)
        .map(|code| (encode(&m.act(&decode(code, m.n, m.p)), m.p) - 1) as u32)
        .collect();
    Perm::from_images(images).expect("invertible matrices permute nonzero vectors")
}

fn direct_matrix_order(n: usize, p: u64, gens: &[Matrix], cap: usize) -> Result<usize> {
    let mut seen: HashSet<Matrix> = HashSet::from([Matrix::identity(n, p)]);
    let mut queue = vec![Matrix::identity(n, p)];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push(y);
            }
        }
    }
    Ok(seen.len())
}

pub fn make_matrix_group(n: usize, p: u64, generators: &[Vec<Vec<i64>>]) -> Result<MatrixGroup> {
    make_matrix_group_capped(n, p, generators, DEFAULT_ORDER_CAP)
}

/// Enumerates the group generated by invertible `n x n` matrices over `F_p`.
///
/// For `n <= 2` the permutation realization is cross-checked against direct
/// enumeration of the matrices.
pub fn make_matrix_group_capped(
    n: usize,
    p: u64,
    generators: &[Vec<Vec<i64>>],
    cap: usize,
) -> Result<MatrixGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidMatrix("dimension must be positive".into()));
    }
    let points = (p as u128).pow(n as u32);
    if points > MAX_POINTS as u128 {
        return Err(Error::InvalidMatrix(format!(
            "{p}^{n} vectors is too many points"
        )));
    }
    let mut matrices = Vec::new();
    for (index, rows) in generators.iter().enumerate() {
        let m = Matrix::from_rows(p, rows)?;
        if m.n() != n {
            return Err(Error::InvalidMatrix(format!(
                "matrix {index} is not {n}x{n}"
            )));
        }
        if m.det() == 0 {
            return Err(Error::SingularMatrix { index, p });
        }
        matrices.push(m);
    }
    let degree = points as usize - 1;
    let gens = matrices.iter().map(matrix_perm).collect();
    let group = FiniteGroup::generate(degree, gens, cap)?;
    if n <= 2 {
        let direct = direct_matrix_order(n, p, &matrices, cap)?;
        if direct != group.order() {
            return Err(Error::InvalidMatrix(format!(
                "vector action is not faithful: {} vs {direct}",
                group.order()
            )));
        }
    }
    Ok(MatrixGroup {
        n,
        p,
        matrices,
        group: Arc::new(group),
    })
}

fn elementary(n: usize, i: usize, j: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| i64::from(r == c || (r == i && c == j)))
                .collect()
        })
        .collect()
}

/// Transvections generating `SL_n(F_p)`.
pub fn sl_generators(n: usize) -> Vec<Vec<Vec<i64>>> {
    (0..n.saturating_sub(1))
        .flat_map(|i| [elementary(n, i, i + 1), elementary(n, i + 1, i)])
        .collect()
}

/// `SL_n` generators plus `diag(w, 1, ..., 1)` for a primitive root `w`.
pub fn gl_generators(n: usize, p: u64) -> Vec<Vec<Vec<i64>>> {
    let mut gens = sl_generators(n);
    let mut d: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    d[0][0] = primitive_root(p) as i64;
    gens.push(d);
    gens
}

pub fn special_linear(n: usize, p: u64) -> Result<MatrixGroup> {
    make_matrix_group(n, p, &sl_generators(n))
}

pub fn general_linear(n: usize, p: u64) -> Result<MatrixGroup> {
    make_matrix_group(n, p, &gl_generators(n, p))
}
