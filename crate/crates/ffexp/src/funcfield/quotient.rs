use super::poly::{mod_inverse, Poly};
use super::FuncFieldError;

/// The quotient ring `F_p[t]/<f>` with elements coded as integers: the
/// residue `sum c_i t^i` is the index `sum c_i p^i` in `[0, N(f))`.
///
/// Addition works digit-wise on the base-`p` expansion. Multiplication
/// reduces a schoolbook product against precomputed rows for `t^k mod f`.
/// When `f` is irreducible the ring is the field `F_{p^d}` and discrete
/// exp/log tables over a fixed generator accelerate `mul`, `inv` and `pow`.
#[derive(Debug, Clone)]
pub struct QuotRing {
    p: u64,
    f: Poly,
    deg: usize,
    size: u64,
    /// t^k mod f for k in [deg, 2 deg - 2], as coefficient rows.
    reduction_rows: Vec<Vec<u64>>,
    /// Set when f is irreducible and the size fits the table budget.
    tables: Option<FieldTables>,
}

#[derive(Debug, Clone)]
struct FieldTables {
    /// exp[i] = g^i for a fixed generator g, i in [0, q-1).
    exp: Vec<u32>,
    /// log[x] for x != 0; log[0] is unused.
    log: Vec<u32>,
}

const TABLE_BUDGET: u64 = 1 << 22;

impl QuotRing {
    pub fn new(f: &Poly) -> Result<QuotRing, FuncFieldError> {
        if f.is_zero() || f.is_constant() {
            return Err(FuncFieldError::ZeroModulus);
        }
        let f = f.monic();
        let p = f.p();
        let deg = f.deg();
        let size = p.pow(deg as u32);

        let mut reduction_rows = Vec::new();
        let mut tk = Poly::t(p).powmod(deg as u128, &f)?;
        for _ in 0..deg.saturating_sub(1) {
            let mut row = tk.coeffs().to_vec();
            row.resize(deg, 0);
            reduction_rows.push(row);
            tk = tk.mul(&Poly::t(p)).rem(&f)?;
        }

        let mut ring = QuotRing { p, f, deg, size, reduction_rows, tables: None };
        if size <= TABLE_BUDGET && ring.f.is_irreducible()? {
            ring.tables = Some(ring.build_tables());
        }
        Ok(ring)
    }

    /// The field `F_{p^d}` presented as `F_p[t]/<l>` for the lexicographically
    /// first monic irreducible of degree `d`.
    pub fn field(p: u64, d: usize) -> QuotRing {
        if d == 1 {
            return QuotRing::new(&Poly::t(p)).expect("t is a valid modulus");
        }
        for code in 0..p.pow(d as u32) {
            let mut coeffs: Vec<u64> = Poly::decode(p, code).coeffs().to_vec();
            coeffs.resize(d, 0);
            coeffs.push(1);
            let f = Poly::from_coeffs(p, &coeffs);
            if f.is_irreducible().expect("degree >= 1") {
                return QuotRing::new(&f).expect("irreducible modulus");
            }
        }
        unreachable!("irreducibles exist in every degree");
    }

    fn build_tables(&self) -> FieldTables {
        let q = self.size;
        // Find a multiplicative generator by trial over element indices.
        let factors = super::poly::prime_factors(q - 1);
        let mut gen = 0u64;
        for cand in 2..q {
            if factors.iter().all(|&r| self.pow_raw(cand, (q - 1) / r) != 1) {
                gen = cand;
                break;
            }
        }
        assert!(gen != 0, "no generator found");
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for i in 0..(q - 1) {
            exp.push(acc as u32);
            log[acc as usize] = i as u32;
            acc = self.mul_raw(acc, gen);
        }
        FieldTables { exp, log }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &Poly {
        &self.f
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    /// Ring size `N(f)`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn is_field(&self) -> bool {
        self.tables.is_some() || self.f.is_irreducible().unwrap_or(false)
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn from_poly(&self, x: &Poly) -> Result<u64, FuncFieldError> {
        if x.degree().map_or(false, |d| d >= self.deg) {
            return Ok(x.rem(&self.f)?.encode());
        }
        Ok(x.encode())
    }

    pub fn to_poly(&self, x: u64) -> Poly {
        Poly::decode(self.p, x)
    }

    pub fn embed_constant(&self, c: u64) -> u64 {
        c % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut shift = 1u64;
        for _ in 0..self.deg {
            out += (a % p + b % p) % p * shift;
            a /= p;
            b /= p;
            shift *= p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let p = self.p;
        let mut a = a;
        let mut out = 0u64;
        let mut shift = 1u64;
        for _ in 0..self.deg {
            out += (p - a % p) % p * shift;
            a /= p;
            shift *= p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.tables {
            if a == 0 || b == 0 {
                return 0;
            }
            let q1 = self.size - 1;
            let s = t.log[a as usize] as u64 + t.log[b as usize] as u64;
            return t.exp[if s >= q1 { s - q1 } else { s } as usize] as u64;
        }
        self.mul_raw(a, b)
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let d = self.deg;
        // Schoolbook digits.
        let mut da = [0u64; 16];
        let mut db = [0u64; 16];
        let (mut x, mut y) = (a, b);
        for i in 0..d {
            da[i] = x % p;
            db[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = [0u64; 31];
        for i in 0..d {
            if da[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] += da[i] * db[j];
            }
        }
        // Fold t^k for k >= d through the reduction rows.
        for k in (d..=(2 * d).saturating_sub(2)).rev() {
            let c = prod[k] % p;
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &r) in self.reduction_rows[k - d].iter().enumerate() {
                prod[j] += c * r;
            }
        }
        let mut out = 0u64;
        let mut shift = 1u64;
        for slot in prod.iter().take(d) {
            out += slot % p * shift;
            shift *= p;
        }
        out
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if let Some(t) = &self.tables {
            if a == 0 {
                return if e == 0 { 1 } else { 0 };
            }
            let q1 = self.size - 1;
            let idx = (t.log[a as usize] as u128 * e as u128 % q1 as u128) as usize;
            return t.exp[idx] as u64;
        }
        self.pow_raw(a, e)
    }

    fn pow_raw(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, a);
            }
            a = self.mul_raw(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, a: u64) -> bool {
        if a == 0 {
            return false;
        }
        if self.tables.is_some() {
            return true;
        }
        self.to_poly(a).gcd(&self.f).is_one()
    }

    pub fn inv(&self, a: u64) -> Result<u64, FuncFieldError> {
        if a == 0 {
            return Err(FuncFieldError::NotInvertible("0".into(), self.f.to_string()));
        }
        if let Some(t) = &self.tables {
            let q1 = self.size - 1;
            let l = t.log[a as usize] as u64;
            return Ok(t.exp[if l == 0 { 0 } else { (q1 - l) as usize } as usize] as u64);
        }
        let x = self.to_poly(a);
        let (g, s, _) = x.extended_gcd(&self.f);
        if !g.is_one() {
            return Err(FuncFieldError::NotInvertible(x.to_string(), self.f.to_string()));
        }
        self.from_poly(&s)
    }

    /// Subfield membership `x^{q'} = x`.
    pub fn in_subfield(&self, a: u64, q_prime: u64) -> bool {
        self.pow(a, q_prime) == a
    }

    /// Multiplicative order of a unit.
    pub fn mult_order(&self, a: u64) -> u64 {
        debug_assert!(self.is_unit(a));
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Inverse of a base-field constant, as an element index.
    pub fn const_inv(&self, c: u64) -> u64 {
        mod_inverse(c, self.p)
    }
}
