//! Concrete groups: cyclic, elementary abelian, direct products, the
//! split extensions `C_{p^α} ⋉ (F_q)^β` with an irreducible order-p action,
//! and minimal non-abelian p-group exemplars.

pub mod field;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{GroupTable, DEFAULT_ORDER_CAP};

pub use field::{FieldPoly, FqMatrix};

/// Parameters of a split extension `P ⋉ Q` with `P` cyclic of order p^α
/// acting on `Q = (F_q)^β` through `action_matrix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectSpec {
    pub p: u64,
    pub alpha: u32,
    pub q: u64,
    pub beta: u32,
    /// Monic irreducible divisor of `1 + x + … + x^(p-1)` whose companion
    /// matrix is `action_matrix`.
    pub polynomial: FieldPoly,
    pub action_matrix: FqMatrix,
}

impl SemidirectSpec {
    /// `M^p = I`, `M ≠ I`, and every nonzero vector generates the whole
    /// space under `M`.
    pub fn check(&self) -> bool {
        let m = &self.action_matrix;
        m.dim() == self.beta as usize && m.pow(self.p).is_identity() && !m.is_identity() && m.acts_irreducibly()
    }
}

/// An order-p matrix acting irreducibly on (F_q)^β, β = ord_p(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleAction {
    pub beta: u32,
    pub polynomial: FieldPoly,
    pub matrix: FqMatrix,
}

/// Group constructors sharing an order cap.
#[derive(Clone, Copy, Debug)]
pub struct Builder {
    pub cap: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Builder { cap: DEFAULT_ORDER_CAP }
    }
}

fn require_prime(p: u64) -> Result<()> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

impl Builder {
    pub fn new(cap: usize) -> Self {
        Builder { cap }
    }

    fn check_order(&self, order: u64) -> Result<usize> {
        if order > self.cap as u64 {
            Err(Error::OrderCapExceeded { order: order.min(usize::MAX as u64) as usize, cap: self.cap })
        } else {
            Ok(order as usize)
        }
    }

    fn pow_checked(&self, base: u64, exp: u32) -> Result<usize> {
        match arith::checked_pow(base, exp) {
            Some(v) => self.check_order(v),
            None => Err(Error::OrderCapExceeded { order: usize::MAX, cap: self.cap }),
        }
    }

    /// Integers mod n under addition.
    pub fn cyclic(&self, n: usize) -> Result<GroupTable> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be positive".into()));
        }
        let n = self.check_order(n as u64)?;
        let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
        Ok(GroupTable::from_trusted(table, n, 0, format!("cyclic:{n}")))
    }

    /// `(F_q)^β` under addition; element index encodes the vector in base q,
    /// coordinate 0 least significant.
    pub fn elementary_abelian(&self, q: u64, beta: u32) -> Result<GroupTable> {
        require_prime(q)?;
        let n = self.pow_checked(q, beta)?;
        let b = beta as usize;
        let table = (0..n as u64)
            .flat_map(|i| {
                let v = field::decode_vector(q, b, i);
                (0..n as u64).map(move |j| {
                    let w = field::decode_vector(q, b, j);
                    let s: Vec<u64> = v.iter().zip(&w).map(|(a, c)| (a + c) % q).collect();
                    field::encode_vector(q, &s) as u32
                })
            })
            .collect();
        Ok(GroupTable::from_trusted(table, n, 0, format!("elemab:{q},{beta}")))
    }

    /// Componentwise product; pair (g, h) has index `g·|H| + h`.
    pub fn direct_product(&self, g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
        let (ng, nh) = (g.order(), h.order());
        let n = self.check_order(ng as u64 * nh as u64)?;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let x = g.mul(a / nh, b / nh);
                let y = h.mul(a % nh, b % nh);
                table.push((x * nh + y) as u32);
            }
        }
        let identity = g.identity() * nh + h.identity();
        let labels = (0..n).map(|k| format!("({},{})", g.label(k / nh), h.label(k % nh))).collect();
        Ok(GroupTable::from_trusted(table, n, identity, format!("product:{},{}", g.name(), h.name()))
            .with_labels(labels))
    }

    /// Symmetries of the regular n-gon; index `e·n + k` is `s^e r^k`.
    pub fn dihedral(&self, n: usize) -> Result<GroupTable> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("dihedral:{n} needs n >= 3")));
        }
        let order = self.check_order(2 * n as u64)?;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (e, k) = (a / n, a % n);
            for b in 0..order {
                let (f, l) = (b / n, b % n);
                // r^k s^f = s^f r^(±k)
                let k2 = if f == 1 { (n - k) % n } else { k };
                table.push((((e + f) % 2) * n + (k2 + l) % n) as u32);
            }
        }
        let labels = (0..order)
            .map(|a| match (a / n, a % n) {
                (0, 0) => "e".to_string(),
                (0, k) => format!("r^{k}"),
                (_, 0) => "s".to_string(),
                (_, k) => format!("s r^{k}"),
            })
            .collect();
        Ok(GroupTable::from_trusted(table, order, 0, format!("dihedral:{n}")).with_labels(labels))
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion8(&self) -> Result<GroupTable> {
        self.check_order(8)?;
        // unit index 0..4 = 1, i, j, k; element index = 2·unit + (sign bit)
        const UNIT: [[(u8, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut table = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                let (s, u) = UNIT[a / 2][b / 2];
                let sign = (a % 2) as u8 ^ (b % 2) as u8 ^ s;
                table.push((2 * u + sign as usize) as u32);
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        Ok(GroupTable::from_trusted(table, 8, 0, "q8").with_labels(labels))
    }

    /// β = ord_p(q) and the companion matrix of the lexicographically first
    /// monic irreducible degree-β divisor of `1 + x + … + x^(p-1)` over F_q.
    pub fn irreducible_action_matrix(&self, p: u64, q: u64) -> Result<IrreducibleAction> {
        require_prime(p)?;
        require_prime(q)?;
        if p == q {
            return Err(Error::PrimesEqual(p));
        }
        let beta = arith::multiplicative_order(q, p) as u32;
        let size = arith::checked_pow(q, beta).unwrap_or(u64::MAX);
        if size > self.cap as u64 {
            return Err(Error::SearchSpaceExceeded { size, cap: self.cap });
        }
        let target = FieldPoly::all_ones(q, p as usize);
        let polynomial = field::monic_polys(q, beta as usize)
            .find(|f| f.divides(&target) && f.is_irreducible())
            .ok_or(Error::NoIrreducibleAction { p, q })?;
        let matrix = polynomial.companion_matrix();
        Ok(IrreducibleAction { beta, polynomial, matrix })
    }

    pub fn semidirect_spec(&self, p: u64, alpha: u32, q: u64) -> Result<SemidirectSpec> {
        if alpha == 0 {
            return Err(Error::InvalidParameter("alpha must be at least 1".into()));
        }
        let act = self.irreducible_action_matrix(p, q)?;
        Ok(SemidirectSpec {
            p,
            alpha,
            q,
            beta: act.beta,
            polynomial: act.polynomial,
            action_matrix: act.matrix,
        })
    }

    /// `C_{p^α} ⋉ (F_q)^β` with `(i,v)·(j,w) = (i+j, v·M^j + w)`. Index of
    /// `(i, v)` is `i·q^β + code(v)`.
    pub fn minimal_nonabelian_pq(&self, p: u64, alpha: u32, q: u64) -> Result<GroupTable> {
        if p == q {
            return Err(Error::PrimesEqual(p));
        }
        let spec = self.semidirect_spec(p, alpha, q)?;
        let p_order = arith::checked_pow(p, alpha)
            .ok_or(Error::OrderCapExceeded { order: usize::MAX, cap: self.cap })?;
        let q_order = q.pow(spec.beta);
        let n = match p_order.checked_mul(q_order) {
            Some(v) => self.check_order(v)?,
            None => return Err(Error::OrderCapExceeded { order: usize::MAX, cap: self.cap }),
        };
        let beta = spec.beta as usize;
        let qn = q_order as usize;
        let vectors: Vec<Vec<u64>> = field::all_vectors(q, beta).collect();
        // action[r][v] = code(v·M^r), r < p
        let mut action = vec![(0..qn).collect::<Vec<usize>>()];
        for r in 1..p as usize {
            let prev = &action[r - 1];
            let next = (0..qn)
                .map(|v| field::encode_vector(q, &spec.action_matrix.apply(&vectors[prev[v]])) as usize)
                .collect();
            action.push(next);
        }
        let add = |a: usize, b: usize| -> usize {
            let s: Vec<u64> = vectors[a].iter().zip(&vectors[b]).map(|(x, y)| (x + y) % q).collect();
            field::encode_vector(q, &s) as usize
        };
        let pn = p_order as usize;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            let (i, v) = (a / qn, a % qn);
            for b in 0..n {
                let (j, w) = (b / qn, b % qn);
                let k = (i + j) % pn;
                table.push((k * qn + add(action[j % p as usize][v], w)) as u32);
            }
        }
        let labels = (0..n)
            .map(|a| {
                let digits: String = vectors[a % qn].iter().map(|d| d.to_string()).collect();
                format!("({}|{digits})", a / qn)
            })
            .collect();
        Ok(GroupTable::from_trusted(table, n, 0, format!("mna:{p},{alpha},{q}")).with_labels(labels))
    }

    /// `⟨a, b : a^(p^m) = b^(p^n) = 1, b⁻¹ab = a^(1+p^(m-1))⟩` on normal forms
    /// `b^y a^x`; the pair (x, y) has index `x·p^n + y`.
    pub fn metacyclic_minimal_p_group(&self, p: u64, m: u32, n: u32) -> Result<GroupTable> {
        require_prime(p)?;
        if m < 2 || n < 1 {
            return Err(Error::InvalidParameter(format!("metacyclic:{p},{m},{n} needs m >= 2 and n >= 1")));
        }
        let order = self.pow_checked(p, m + n)?;
        let am = p.pow(m) as usize;
        let bn = p.pow(n) as usize;
        let r = 1 + p.pow(m - 1) as usize;
        // r^y mod p^m
        let mut rpow = vec![1usize; bn];
        for y in 1..bn {
            rpow[y] = rpow[y - 1] * r % am;
        }
        let mut table = Vec::with_capacity(order * order);
        for s in 0..order {
            let (x1, y1) = (s / bn, s % bn);
            for t in 0..order {
                let (x2, y2) = (t / bn, t % bn);
                // b^y1 a^x1 b^y2 a^x2 = b^(y1+y2) a^(x1 r^y2 + x2)
                let x = (x1 * rpow[y2] + x2) % am;
                let y = (y1 + y2) % bn;
                table.push((x * bn + y) as u32);
            }
        }
        let labels = (0..order)
            .map(|s| match (s / bn, s % bn) {
                (0, 0) => "e".to_string(),
                (x, 0) => format!("a^{x}"),
                (0, y) => format!("b^{y}"),
                (x, y) => format!("b^{y} a^{x}"),
            })
            .collect();
        Ok(GroupTable::from_trusted(table, order, 0, format!("metacyclic:{p},{m},{n}")).with_labels(labels))
    }
}

pub fn cyclic(n: usize) -> Result<GroupTable> {
    Builder::default().cyclic(n)
}

pub fn elementary_abelian(q: u64, beta: u32) -> Result<GroupTable> {
    Builder::default().elementary_abelian(q, beta)
}

pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    Builder::default().direct_product(g, h)
}

pub fn dihedral(n: usize) -> Result<GroupTable> {
    Builder::default().dihedral(n)
}

pub fn quaternion8() -> GroupTable {
    Builder::default().quaternion8().expect("order 8 is below any sensible cap")
}

pub fn irreducible_action_matrix(p: u64, q: u64) -> Result<IrreducibleAction> {
    Builder::default().irreducible_action_matrix(p, q)
}

pub fn minimal_nonabelian_pq(p: u64, alpha: u32, q: u64) -> Result<GroupTable> {
    Builder::default().minimal_nonabelian_pq(p, alpha, q)
}

pub fn metacyclic_minimal_p_group(p: u64, m: u32, n: u32) -> Result<GroupTable> {
    Builder::default().metacyclic_minimal_p_group(p, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_order(g: &GroupTable, k: usize) -> usize {
        g.elements().filter(|&x| g.element_order(x) == k).count()
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let c2 = cyclic(2).unwrap();
        assert!(c2.elements().all(|x| c2.inv(x) == x));
        let c6 = cyclic(6).unwrap();
        assert!(c6.is_commutative());
        assert_eq!(count_order(&c6, 6), 2);
        assert!(matches!(Builder::new(5).cyclic(6), Err(Error::OrderCapExceeded { .. })));
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn elementary_abelian_groups() {
        let v4 = elementary_abelian(2, 2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(count_order(&v4, 2), 3);
        let c3 = elementary_abelian(3, 1).unwrap();
        assert_eq!(count_order(&c3, 3), 2);
        assert_eq!(count_order(&elementary_abelian(2, 4).unwrap(), 2), 15);
        assert_eq!(elementary_abelian(4, 2).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn direct_products() {
        let t = cyclic(1).unwrap();
        let s3 = dihedral(3).unwrap();
        assert_eq!(direct_product(&t, &s3).unwrap().order(), 6);
        let c6 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert_eq!(count_order(&c6, 6), 2);
        let g = direct_product(&cyclic(2).unwrap(), &s3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.center().len(), 2);
        g.validate().unwrap();
    }

    #[test]
    fn irreducible_actions() {
        let a = irreducible_action_matrix(2, 3).unwrap();
        assert_eq!(a.beta, 1);
        assert_eq!(a.matrix.rows(), vec![vec![2]]);
        let a = irreducible_action_matrix(3, 2).unwrap();
        assert_eq!(a.beta, 2);
        assert_eq!(a.polynomial, FieldPoly::new(2, [1, 1, 1]));
        assert_eq!(a.matrix, FieldPoly::new(2, [1, 1, 1]).companion_matrix());
        let a = irreducible_action_matrix(5, 2).unwrap();
        assert_eq!(a.beta, 4);
        assert_eq!(a.polynomial, FieldPoly::all_ones(2, 5));
        // 1 + x + x^2 = (x + 3)(x + 5) over F7; (c0) = (3) is first.
        let a = irreducible_action_matrix(3, 7).unwrap();
        assert_eq!(a.polynomial, FieldPoly::new(7, [3, 1]));
        assert_eq!(a.matrix.rows(), vec![vec![4]]);
        assert_eq!(irreducible_action_matrix(3, 3).unwrap_err(), Error::PrimesEqual(3));
        assert!(matches!(
            Builder::new(10).irreducible_action_matrix(5, 2),
            Err(Error::SearchSpaceExceeded { size: 16, cap: 10 })
        ));
    }

    #[test]
    fn semidirect_spec_invariants() {
        for (p, q) in [(2, 3), (3, 2), (3, 7), (5, 2), (2, 5), (3, 5), (7, 2)] {
            let spec = Builder::default().semidirect_spec(p, 1, q).unwrap();
            assert!(spec.check(), "p={p} q={q}");
        }
    }

    #[test]
    fn pq_orders_and_centers() {
        for (p, a, q, order, z) in [(2, 1, 3, 6, 1), (3, 1, 2, 12, 1), (2, 2, 3, 12, 2), (3, 1, 7, 21, 1), (5, 1, 2, 80, 1)] {
            let g = minimal_nonabelian_pq(p, a, q).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.center().len(), z);
            // Z = <(p, 0)>
            let gen = ((p % p.pow(a)) as usize) * (g.order() / (p.pow(a) as usize));
            assert_eq!(g.cyclic_subgroup(gen), g.center());
        }
        assert_eq!(minimal_nonabelian_pq(2, 1, 2).unwrap_err(), Error::PrimesEqual(2));
        assert!(matches!(Builder::new(50).minimal_nonabelian_pq(5, 1, 2), Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn p_group_exemplars() {
        let q8 = quaternion8();
        q8.validate().unwrap();
        assert_eq!(q8.center().len(), 2);
        assert_eq!(count_order(&q8, 4), 6);
        let d8 = metacyclic_minimal_p_group(2, 2, 1).unwrap();
        d8.validate().unwrap();
        assert_eq!(count_order(&d8, 2), 5);
        assert_eq!(metacyclic_minimal_p_group(3, 2, 1).unwrap().order(), 27);
        assert_eq!(metacyclic_minimal_p_group(2, 2, 2).unwrap().order(), 16);
        assert!(metacyclic_minimal_p_group(2, 1, 1).is_err());
    }

    #[test]
    fn dihedral_groups() {
        assert!(dihedral(2).is_err());
        let d12 = dihedral(6).unwrap();
        d12.validate().unwrap();
        assert_eq!(d12.order(), 12);
        assert_eq!(d12.center().len(), 2);
        assert_eq!(count_order(&dihedral(3).unwrap(), 2), 3);
    }
}
