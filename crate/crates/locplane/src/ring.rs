//! Commutative rings with decidable invertibility.
//!
//! A [`RingContext`] names a ring; a [`RingValue`] is an element tagged with its
//! context. Four kinds are supported: integers mod `n`, the rationals, dual
//! numbers over `Z/p`, and finite rings given by explicit operation tables
//! (used for rings reconstructed from planes).

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by ring construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring context mismatch: {0} vs {1}")]
    Mismatch(String, String),
    #[error("unknown ring descriptor `{0}`")]
    BadDescriptor(String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("dual numbers need a prime characteristic, got {0}")]
    BadPrime(u64),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("operation requires finite ring, {0} is infinite")]
    Infinite(String),
    #[error("invalid ring table: {0}")]
    BadTable(String),
    #[error("not a ring homomorphism: {0}")]
    NotHom(String),
    #[error("element index {0} out of range")]
    OutOfRange(u64),
    #[error("operation not supported for {0}")]
    Unsupported(String),
}

/// Finite commutative ring given by addition and multiplication tables over
/// the indices `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<Option<u32>>,
    zero: u32,
    one: u32,
    labels: Vec<String>,
}

impl RingTable {
    /// Builds a table ring and checks every commutative-ring axiom exhaustively.
    pub fn new(size: usize, add: Vec<u32>, mul: Vec<u32>, zero: u32, one: u32) -> Result<Self, RingError> {
        if size == 0 || add.len() != size * size || mul.len() != size * size {
            return Err(RingError::BadTable("table shape does not match size".into()));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= size) || zero as usize >= size || one as usize >= size {
            return Err(RingError::BadTable("entry out of range".into()));
        }
        let mut neg = vec![u32::MAX; size];
        for x in 0..size {
            for y in 0..size {
                if add[x * size + y] == zero {
                    neg[x] = y as u32;
                    break;
                }
            }
            if neg[x] == u32::MAX {
                return Err(RingError::BadTable(format!("element {x} has no additive inverse")));
            }
        }
        let mut inv = vec![None; size];
        for x in 0..size {
            inv[x] = (0..size).find(|&y| mul[x * size + y] == one).map(|y| y as u32);
        }
        let t = RingTable { size, add, mul, neg, inv, zero, one, labels: (0..size).map(|i| i.to_string()).collect() };
        t.check_axioms()?;
        Ok(t)
    }

    /// Table of a finite ring context, indexed by enumeration order.
    pub fn from_context(ctx: &RingContext) -> Result<Self, RingError> {
        if let Kind::Table(t) = &*ctx.0 {
            return Ok((**t).clone());
        }
        let elems = ctx.enumerate()?;
        let n = elems.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                add.push((x + y).index().expect("finite") as u32);
                mul.push((x * y).index().expect("finite") as u32);
            }
        }
        let mut t = RingTable::new(n, add, mul, ctx.zero().index().unwrap() as u32, ctx.one().index().unwrap() as u32)?;
        t.labels = elems.iter().map(|e| e.to_string()).collect();
        Ok(t)
    }

    /// Replaces the display labels of the elements.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size);
        self.labels = labels;
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }
    pub fn zero(&self) -> u32 {
        self.zero
    }
    pub fn one(&self) -> u32 {
        self.one
    }
    pub fn label(&self, i: u32) -> &str {
        &self.labels[i as usize]
    }
    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[x as usize * self.size + y as usize]
    }
    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.size + y as usize]
    }
    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        self.neg[x as usize]
    }
    #[inline]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }
    #[inline]
    pub fn inv(&self, x: u32) -> Option<u32> {
        self.inv[x as usize]
    }
    #[inline]
    pub fn is_invertible(&self, x: u32) -> bool {
        self.inv[x as usize].is_some()
    }

    /// Checks associativity, commutativity, identities, inverses and
    /// distributivity over every tuple.
    pub fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.size as u32;
        let bad = |what: &str, t: &[u32]| Err(RingError::BadTable(format!("{what} fails at {t:?}")));
        for x in 0..n {
            if self.add(x, self.zero) != x {
                return bad("additive identity", &[x]);
            }
            if self.mul(x, self.one) != x {
                return bad("multiplicative identity", &[x]);
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    return bad("additive commutativity", &[x, y]);
                }
                if self.mul(x, y) != self.mul(y, x) {
                    return bad("multiplicative commutativity", &[x, y]);
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return bad("additive associativity", &[x, y, z]);
                    }
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return bad("multiplicative associativity", &[x, y, z]);
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return bad("distributivity", &[x, y, z]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Locality check with the witness convention of [`RingContext::check_local`].
    pub fn check_local(&self) -> Locality {
        if self.is_invertible(self.zero) {
            return Locality::ZeroInvertible;
        }
        let n = self.size as u32;
        for y in 0..n {
            for x in 0..n {
                if self.is_invertible(self.add(x, y)) && !self.is_invertible(x) && !self.is_invertible(y) {
                    return Locality::NotLocal(x, y);
                }
            }
        }
        Locality::Local
    }

    /// Searches for a ring isomorphism `self -> other`, returned as an image table.
    pub fn find_isomorphism(&self, other: &RingTable) -> Option<Vec<u32>> {
        if self.size != other.size {
            return None;
        }
        let n = self.size;
        let mut img = vec![u32::MAX; n];
        let mut used = vec![false; n];
        img[self.zero as usize] = other.zero;
        used[other.zero as usize] = true;
        if self.one != self.zero {
            if used[other.one as usize] {
                return None;
            }
            img[self.one as usize] = other.one;
            used[other.one as usize] = true;
        }
        if self.extend_iso(other, &mut img, &mut used, 0) {
            Some(img)
        } else {
            None
        }
    }

    fn consistent(&self, other: &RingTable, img: &[u32], x: usize) -> bool {
        let fx = img[x];
        for y in 0..self.size {
            let fy = img[y];
            if fy == u32::MAX {
                continue;
            }
            for (s, o) in [(self.add(x as u32, y as u32), other.add(fx, fy)), (self.mul(x as u32, y as u32), other.mul(fx, fy))] {
                let fs = img[s as usize];
                if fs != u32::MAX && fs != o {
                    return false;
                }
            }
        }
        true
    }

    fn extend_iso(&self, other: &RingTable, img: &mut [u32], used: &mut [bool], from: usize) -> bool {
        let Some(x) = (from..self.size).find(|&x| img[x] == u32::MAX) else {
            return (0..self.size).all(|x| self.consistent(other, img, x));
        };
        for c in 0..other.size {
            if used[c] {
                continue;
            }
            img[x] = c as u32;
            used[c] = true;
            if self.consistent(other, img, x) && self.extend_iso(other, img, used, x + 1) {
                return true;
            }
            img[x] = u32::MAX;
            used[c] = false;
        }
        false
    }
}

/// Outcome of a locality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locality {
    Local,
    /// `0` is invertible, so the ring is trivial.
    ZeroInvertible,
    /// `x + y` is invertible while neither `x` nor `y` is (enumeration indices).
    NotLocal(u32, u32),
}

#[derive(Debug)]
enum Kind {
    ZMod(u64),
    Rational,
    Dual(u64),
    Table(Arc<RingTable>),
}

/// A ring; cheap to clone and shareable across threads.
#[derive(Clone, Debug)]
pub struct RingContext(Arc<Kind>);

/// Borrowed view of a context's kind.
#[derive(Clone, Copy, Debug)]
pub enum RingKind<'a> {
    ZMod(u64),
    Rational,
    Dual(u64),
    Table(&'a RingTable),
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        match (&*self.0, &*other.0) {
            (Kind::ZMod(a), Kind::ZMod(b)) | (Kind::Dual(a), Kind::Dual(b)) => a == b,
            (Kind::Rational, Kind::Rational) => true,
            (Kind::Table(a), Kind::Table(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}
impl Eq for RingContext {}

impl Hash for RingContext {
    fn hash<H: Hasher>(&self, h: &mut H) {
        match &*self.0 {
            Kind::ZMod(n) => (0u8, *n).hash(h),
            Kind::Rational => 1u8.hash(h),
            Kind::Dual(p) => (2u8, *p).hash(h),
            Kind::Table(t) => (3u8, t.size).hash(h),
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl RingContext {
    /// Integers modulo `n`, `n >= 2`.
    pub fn zmod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::BadModulus(n));
        }
        Ok(RingContext(Arc::new(Kind::ZMod(n))))
    }

    /// The rational numbers.
    pub fn rational() -> Self {
        RingContext(Arc::new(Kind::Rational))
    }

    /// Dual numbers `Z/p[ε]/(ε²)` for a prime `p`.
    pub fn dual(p: u64) -> Result<Self, RingError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(RingError::BadPrime(p));
        }
        Ok(RingContext(Arc::new(Kind::Dual(p))))
    }

    /// A finite ring given by tables.
    pub fn from_table(t: RingTable) -> Self {
        RingContext(Arc::new(Kind::Table(Arc::new(t))))
    }

    /// Parses `zmod:<n>`, `rational` or `dual:<p>`.
    pub fn parse(desc: &str) -> Result<Self, RingError> {
        let bad = || RingError::BadDescriptor(desc.to_string());
        if desc == "rational" {
            return Ok(Self::rational());
        }
        let (name, arg) = desc.split_once(':').ok_or_else(bad)?;
        if arg.is_empty() || !arg.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let v: u64 = arg.parse().map_err(|_| bad())?;
        match name {
            "zmod" => Self::zmod(v),
            "dual" => Self::dual(v),
            _ => Err(bad()),
        }
    }

    /// Descriptor string; table rings report `table:<size>`, which does not parse.
    pub fn descriptor(&self) -> String {
        match &*self.0 {
            Kind::ZMod(n) => format!("zmod:{n}"),
            Kind::Rational => "rational".into(),
            Kind::Dual(p) => format!("dual:{p}"),
            Kind::Table(t) => format!("table:{}", t.size),
        }
    }

    pub fn kind(&self) -> RingKind<'_> {
        match &*self.0 {
            Kind::ZMod(n) => RingKind::ZMod(*n),
            Kind::Rational => RingKind::Rational,
            Kind::Dual(p) => RingKind::Dual(*p),
            Kind::Table(t) => RingKind::Table(t),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match &*self.0 {
            Kind::ZMod(n) => Some(*n),
            Kind::Rational => None,
            Kind::Dual(p) => Some(p * p),
            Kind::Table(t) => Some(t.size as u64),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    fn finite_size(&self) -> Result<u64, RingError> {
        self.size().ok_or_else(|| RingError::Infinite(self.descriptor()))
    }

    fn int_value(&self, e: u64) -> RingValue {
        RingValue { ctx: self.clone(), e: Elem::Int(e) }
    }

    pub fn zero(&self) -> RingValue {
        match &*self.0 {
            Kind::Rational => RingValue { ctx: self.clone(), e: Elem::Rat(BigRational::zero()) },
            Kind::Table(t) => self.int_value(t.zero as u64),
            _ => self.int_value(0),
        }
    }

    pub fn one(&self) -> RingValue {
        match &*self.0 {
            Kind::Rational => RingValue { ctx: self.clone(), e: Elem::Rat(BigRational::one()) },
            Kind::Table(t) => self.int_value(t.one as u64),
            _ => self.int_value(1),
        }
    }

    /// Image of an integer under the unique map `Z -> R`.
    pub fn int(&self, v: i64) -> RingValue {
        match &*self.0 {
            Kind::ZMod(n) | Kind::Dual(n) => self.int_value((v as i128).rem_euclid(*n as i128) as u64),
            Kind::Rational => RingValue { ctx: self.clone(), e: Elem::Rat(BigRational::from_integer(BigInt::from(v))) },
            Kind::Table(_) => {
                let mut acc = self.zero();
                let mut base = if v < 0 { -self.one() } else { self.one() };
                let mut k = v.unsigned_abs();
                while k > 0 {
                    if k & 1 == 1 {
                        acc = &acc + &base;
                    }
                    base = &base + &base;
                    k >>= 1;
                }
                acc
            }
        }
    }

    /// Rational number `num/den`.
    pub fn ratio(&self, num: i64, den: i64) -> Result<RingValue, RingError> {
        match &*self.0 {
            Kind::Rational if den != 0 => Ok(RingValue {
                ctx: self.clone(),
                e: Elem::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))),
            }),
            Kind::Rational => Err(RingError::NotInvertible("0".into())),
            _ => Err(RingError::Unsupported(self.descriptor())),
        }
    }

    /// Wraps an arbitrary rational.
    pub fn from_rational(&self, q: BigRational) -> Result<RingValue, RingError> {
        match &*self.0 {
            Kind::Rational => Ok(RingValue { ctx: self.clone(), e: Elem::Rat(q) }),
            _ => Err(RingError::Unsupported(self.descriptor())),
        }
    }

    /// Dual number `a + bε`.
    pub fn dual_elem(&self, a: u64, b: u64) -> Result<RingValue, RingError> {
        match &*self.0 {
            Kind::Dual(p) => Ok(self.int_value(a % p + p * (b % p))),
            _ => Err(RingError::Unsupported(self.descriptor())),
        }
    }

    /// Element at position `i` of the enumeration order.
    pub fn element(&self, i: u64) -> Result<RingValue, RingError> {
        let n = self.finite_size()?;
        if i >= n {
            return Err(RingError::OutOfRange(i));
        }
        Ok(self.int_value(i))
    }

    /// All elements in the fixed order: residues `0..n`; dual numbers
    /// `a + bε` with index `a + p·b`; table rings by index.
    pub fn enumerate(&self) -> Result<Vec<RingValue>, RingError> {
        let n = self.finite_size()?;
        Ok((0..n).map(|i| self.int_value(i)).collect())
    }

    /// Operation tables of a finite context.
    pub fn table(&self) -> Result<RingTable, RingError> {
        RingTable::from_context(self)
    }

    /// Decides locality. Finite rings are scanned exhaustively; the first
    /// witness `(x, y)` is taken with `y` as the outer loop.
    pub fn check_local(&self) -> Result<LocalityReport, RingError> {
        match &*self.0 {
            Kind::Rational => Ok(LocalityReport::Local),
            _ => {
                let n = self.finite_size()?;
                let elems: Vec<RingValue> = (0..n).map(|i| self.int_value(i)).collect();
                if self.zero().is_invertible() {
                    return Ok(LocalityReport::ZeroInvertible);
                }
                let inv: Vec<bool> = elems.iter().map(|e| e.is_invertible()).collect();
                for (j, y) in elems.iter().enumerate() {
                    for (i, x) in elems.iter().enumerate() {
                        if !inv[i] && !inv[j] && (x + y).is_invertible() {
                            return Ok(LocalityReport::NotLocal(x.clone(), y.clone()));
                        }
                    }
                }
                Ok(LocalityReport::Local)
            }
        }
    }

    /// Convenience wrapper around [`RingContext::check_local`].
    pub fn is_local(&self) -> Result<bool, RingError> {
        Ok(matches!(self.check_local()?, LocalityReport::Local))
    }
}

/// Locality check result carrying ring values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalityReport {
    Local,
    ZeroInvertible,
    NotLocal(RingValue, RingValue),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Elem {
    Int(u64),
    Rat(BigRational),
}

/// An element of a ring, tagged with its context.
///
/// The operator traits panic on context mismatch; the `try_*` methods and the
/// free functions of this module return an error instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingValue {
    ctx: RingContext,
    e: Elem,
}

fn mod_inverse(x: u64, n: u64) -> Option<u64> {
    let g = (x as i128).extended_gcd(&(n as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(n as i128) as u64)
}

impl RingValue {
    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    /// Position in the enumeration order, for finite rings.
    pub fn index(&self) -> Option<u64> {
        match self.e {
            Elem::Int(i) => Some(i),
            Elem::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.e {
            Elem::Rat(q) => Some(q),
            Elem::Int(_) => None,
        }
    }

    /// `(a, b)` for a dual number `a + bε`.
    pub fn dual_parts(&self) -> Option<(u64, u64)> {
        match (&*self.ctx.0, &self.e) {
            (Kind::Dual(p), Elem::Int(i)) => Some((i % p, i / p)),
            _ => None,
        }
    }

    fn same(&self, o: &RingValue) -> Result<(), RingError> {
        if self.ctx == o.ctx {
            Ok(())
        } else {
            Err(RingError::Mismatch(self.ctx.descriptor(), o.ctx.descriptor()))
        }
    }

    fn ints(&self, o: &RingValue) -> (u64, u64) {
        match (&self.e, &o.e) {
            (Elem::Int(a), Elem::Int(b)) => (*a, *b),
            _ => unreachable!("finite context holds integer codes"),
        }
    }

    fn rats<'a>(&'a self, o: &'a RingValue) -> (&'a BigRational, &'a BigRational) {
        match (&self.e, &o.e) {
            (Elem::Rat(a), Elem::Rat(b)) => (a, b),
            _ => unreachable!("rational context holds rationals"),
        }
    }

    pub fn try_add(&self, o: &RingValue) -> Result<RingValue, RingError> {
        self.same(o)?;
        let e = match &*self.ctx.0 {
            Kind::ZMod(n) => {
                let (a, b) = self.ints(o);
                Elem::Int(((a as u128 + b as u128) % *n as u128) as u64)
            }
            Kind::Dual(p) => {
                let (x, y) = self.ints(o);
                let a = (x % p + y % p) % p;
                let b = (x / p + y / p) % p;
                Elem::Int(a + p * b)
            }
            Kind::Rational => {
                let (a, b) = self.rats(o);
                Elem::Rat(a + b)
            }
            Kind::Table(t) => {
                let (a, b) = self.ints(o);
                Elem::Int(t.add(a as u32, b as u32) as u64)
            }
        };
        Ok(RingValue { ctx: self.ctx.clone(), e })
    }

    pub fn try_mul(&self, o: &RingValue) -> Result<RingValue, RingError> {
        self.same(o)?;
        let e = match &*self.ctx.0 {
            Kind::ZMod(n) => {
                let (a, b) = self.ints(o);
                Elem::Int(((a as u128 * b as u128) % *n as u128) as u64)
            }
            Kind::Dual(p) => {
                let (x, y) = self.ints(o);
                let (a1, b1, a2, b2) = (x % p, x / p, y % p, y / p);
                let a = a1 * a2 % p;
                let b = (a1 * b2 % p + b1 * a2 % p) % p;
                Elem::Int(a + p * b)
            }
            Kind::Rational => {
                let (a, b) = self.rats(o);
                Elem::Rat(a * b)
            }
            Kind::Table(t) => {
                let (a, b) = self.ints(o);
                Elem::Int(t.mul(a as u32, b as u32) as u64)
            }
        };
        Ok(RingValue { ctx: self.ctx.clone(), e })
    }

    pub fn try_sub(&self, o: &RingValue) -> Result<RingValue, RingError> {
        self.same(o)?;
        self.try_add(&o.neg_value())
    }

    fn neg_value(&self) -> RingValue {
        let e = match (&*self.ctx.0, &self.e) {
            (Kind::ZMod(n), Elem::Int(a)) => Elem::Int((n - a) % n),
            (Kind::Dual(p), Elem::Int(x)) => Elem::Int((p - x % p) % p + p * ((p - x / p) % p)),
            (Kind::Table(t), Elem::Int(a)) => Elem::Int(t.neg(*a as u32) as u64),
            (_, Elem::Rat(q)) => Elem::Rat(-q),
            _ => unreachable!(),
        };
        RingValue { ctx: self.ctx.clone(), e }
    }

    pub fn is_zero(&self) -> bool {
        *self == self.ctx.zero()
    }

    pub fn is_one(&self) -> bool {
        *self == self.ctx.one()
    }

    pub fn is_invertible(&self) -> bool {
        match (&*self.ctx.0, &self.e) {
            (Kind::ZMod(n), Elem::Int(a)) => a.gcd(n) == 1,
            (Kind::Dual(p), Elem::Int(x)) => x % p != 0,
            (Kind::Table(t), Elem::Int(a)) => t.is_invertible(*a as u32),
            (_, Elem::Rat(q)) => !q.is_zero(),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse, or `None` when not invertible.
    pub fn try_inverse(&self) -> Option<RingValue> {
        let e = match (&*self.ctx.0, &self.e) {
            (Kind::ZMod(n), Elem::Int(a)) => Elem::Int(mod_inverse(*a, *n)?),
            (Kind::Dual(p), Elem::Int(x)) => {
                let (a, b) = (x % p, x / p);
                let ai = mod_inverse(a, *p)?;
                let bi = (p - b * ai % p * ai % p) % p;
                Elem::Int(ai + p * bi)
            }
            (Kind::Table(t), Elem::Int(a)) => Elem::Int(t.inv(*a as u32)? as u64),
            (_, Elem::Rat(q)) => {
                if q.is_zero() {
                    return None;
                }
                Elem::Rat(q.recip())
            }
            _ => unreachable!(),
        };
        Some(RingValue { ctx: self.ctx.clone(), e })
    }

    /// Inverse or a [`RingError::NotInvertible`] error.
    pub fn inverse(&self) -> Result<RingValue, RingError> {
        self.try_inverse().ok_or_else(|| RingError::NotInvertible(self.to_string()))
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&*self.ctx.0, &self.e) {
            (Kind::ZMod(_), Elem::Int(a)) => write!(f, "{a}"),
            (Kind::Dual(p), Elem::Int(x)) => {
                let (a, b) = (x % p, x / p);
                match (a, b) {
                    (a, 0) => write!(f, "{a}"),
                    (0, 1) => write!(f, "ε"),
                    (0, b) => write!(f, "{b}ε"),
                    (a, 1) => write!(f, "{a}+ε"),
                    (a, b) => write!(f, "{a}+{b}ε"),
                }
            }
            (Kind::Table(t), Elem::Int(a)) => write!(f, "{}", t.label(*a as u32)),
            (_, Elem::Rat(q)) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", q.numer().abs(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            _ => unreachable!(),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&RingValue> for &RingValue {
            type Output = RingValue;
            fn $m(self, o: &RingValue) -> RingValue {
                self.$f(o).expect("ring context mismatch")
            }
        }
        impl $tr<RingValue> for RingValue {
            type Output = RingValue;
            fn $m(self, o: RingValue) -> RingValue {
                self.$f(&o).expect("ring context mismatch")
            }
        }
        impl $tr<&RingValue> for RingValue {
            type Output = RingValue;
            fn $m(self, o: &RingValue) -> RingValue {
                self.$f(o).expect("ring context mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.neg_value()
    }
}
impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.neg_value()
    }
}

/// `x + y`, failing on context mismatch.
pub fn add(x: &RingValue, y: &RingValue) -> Result<RingValue, RingError> {
    x.try_add(y)
}
/// `x · y`, failing on context mismatch.
pub fn mul(x: &RingValue, y: &RingValue) -> Result<RingValue, RingError> {
    x.try_mul(y)
}
/// `x − y`, failing on context mismatch.
pub fn sub(x: &RingValue, y: &RingValue) -> Result<RingValue, RingError> {
    x.try_sub(y)
}
/// `−x`.
pub fn neg(x: &RingValue) -> RingValue {
    -x
}
pub fn is_invertible(x: &RingValue) -> bool {
    x.is_invertible()
}
pub fn try_inverse(x: &RingValue) -> Option<RingValue> {
    x.try_inverse()
}
pub fn check_local(ctx: &RingContext) -> Result<LocalityReport, RingError> {
    ctx.check_local()
}
pub fn enumerate(ctx: &RingContext) -> Result<Vec<RingValue>, RingError> {
    ctx.enumerate()
}

/// A ring homomorphism between finite rings, stored as the image of every
/// source element in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    source: RingContext,
    target: RingContext,
    images: Vec<RingValue>,
}

impl RingHom {
    /// Builds a homomorphism and checks that it preserves `0`, `1`, `+`, `×`
    /// and invertibility on every element and pair.
    pub fn new(source: RingContext, target: RingContext, images: Vec<RingValue>) -> Result<Self, RingError> {
        let n = source.finite_size()? as usize;
        if images.len() != n {
            return Err(RingError::NotHom(format!("expected {n} images, got {}", images.len())));
        }
        if let Some(v) = images.iter().find(|v| *v.ctx() != target) {
            return Err(RingError::Mismatch(v.ctx().descriptor(), target.descriptor()));
        }
        let h = RingHom { source, target, images };
        h.check()?;
        Ok(h)
    }

    fn check(&self) -> Result<(), RingError> {
        let src = self.source.enumerate()?;
        let f = |x: &RingValue| &self.images[x.index().unwrap() as usize];
        if !f(&self.source.zero()).is_zero() {
            return Err(RingError::NotHom("0 is not preserved".into()));
        }
        if !f(&self.source.one()).is_one() {
            return Err(RingError::NotHom("1 is not preserved".into()));
        }
        for x in &src {
            if x.is_invertible() && !f(x).is_invertible() {
                return Err(RingError::NotHom(format!("invertibility of {x} is not preserved")));
            }
            for y in &src {
                if *f(&(x + y)) != f(x) + f(y) {
                    return Err(RingError::NotHom(format!("addition fails at ({x},{y})")));
                }
                if *f(&(x * y)) != f(x) * f(y) {
                    return Err(RingError::NotHom(format!("multiplication fails at ({x},{y})")));
                }
            }
        }
        Ok(())
    }

    /// Identity of a finite ring.
    pub fn identity(ctx: &RingContext) -> Result<Self, RingError> {
        RingHom::new(ctx.clone(), ctx.clone(), ctx.enumerate()?)
    }

    /// Reduction `Z/n -> Z/m` for `m | n`.
    pub fn reduction(source: &RingContext, target: &RingContext) -> Result<Self, RingError> {
        match (source.kind(), target.kind()) {
            (RingKind::ZMod(n), RingKind::ZMod(m)) if n % m == 0 => {
                let images = (0..n).map(|i| target.int_value(i % m)).collect();
                RingHom::new(source.clone(), target.clone(), images)
            }
            _ => Err(RingError::NotHom(format!("no reduction {source} -> {target}"))),
        }
    }

    /// All homomorphisms between two finite rings, by exhaustive search over
    /// additive-generator images and full verification.
    pub fn enumerate_all(source: &RingContext, target: &RingContext) -> Result<Vec<RingHom>, RingError> {
        let src = source.enumerate()?;
        let tgt = target.enumerate()?;
        let n = src.len();
        let m = tgt.len();
        let mut out = Vec::new();
        let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if total > 5_000_000 {
            return Err(RingError::Unsupported(format!("{source} -> {target} search space too large")));
        }
        let mut digits = vec![0usize; n];
        loop {
            let images: Vec<RingValue> = digits.iter().map(|&d| tgt[d].clone()).collect();
            if let Ok(h) = RingHom::new(source.clone(), target.clone(), images) {
                out.push(h);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(out);
                }
                digits[i] += 1;
                if digits[i] < m {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    pub fn source(&self) -> &RingContext {
        &self.source
    }
    pub fn target(&self) -> &RingContext {
        &self.target
    }
    pub fn images(&self) -> &[RingValue] {
        &self.images
    }

    /// Applies the map; fails on a value from another ring.
    pub fn apply(&self, x: &RingValue) -> Result<RingValue, RingError> {
        if *x.ctx() != self.source {
            return Err(RingError::Mismatch(x.ctx().descriptor(), self.source.descriptor()));
        }
        Ok(self.images[x.index().expect("finite source") as usize].clone())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom) -> Result<RingHom, RingError> {
        if self.target != other.source {
            return Err(RingError::Mismatch(self.target.descriptor(), other.source.descriptor()));
        }
        let images = self.images.iter().map(|y| other.apply(y)).collect::<Result<_, _>>()?;
        Ok(RingHom { source: self.source.clone(), target: other.target.clone(), images })
    }
}
