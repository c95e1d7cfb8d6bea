//! Tile parameters `K_{a,b,c}`: type classification and the threshold
//! coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{self, q, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeClass {
    Type0,
    /// Type `d >= 1`: `gcd(a,b,c) = 1` and `gcd(b−a, c−b) = d`.
    TypeD(u64),
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeClass::Type0 => write!(f, "type 0"),
            TypeClass::TypeD(d) => write!(f, "type {d}"),
        }
    }
}

/// Parameters of `K_{a,b,c}` with `a <= b <= c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KSpec {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub k: u64,
    /// `gcd(a, b, c)`.
    pub g: u64,
    /// `gcd(b − a, c − b)`, with `gcd(0, 0) = 0`.
    pub d: u64,
    pub type_class: TypeClass,
}

impl KSpec {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        classify(a, b, c)
    }

    pub fn sizes(&self) -> [usize; 3] {
        [self.a as usize, self.b as usize, self.c as usize]
    }

    pub fn k_usize(&self) -> usize {
        self.k as usize
    }
}

impl fmt::Display for KSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{})", self.a, self.b, self.c)
    }
}

pub fn classify(a: u64, b: u64, c: u64) -> Result<KSpec> {
    if a == 0 || !(a <= b && b <= c) {
        return Err(Error::invalid(format!(
            "need 1 <= a <= b <= c, got ({a},{b},{c})"
        )));
    }
    if c > 1 << 20 {
        return Err(Error::invalid("part sizes above 2^20 are not supported"));
    }
    let g = a.gcd(&b).gcd(&c);
    let d = (b - a).gcd(&(c - b));
    let type_class = if g > 1 || (a == 1 && b == 1 && c == 1) {
        TypeClass::Type0
    } else {
        TypeClass::TypeD(d)
    };
    Ok(KSpec {
        a,
        b,
        c,
        k: a + b + c,
        g,
        d,
        type_class,
    })
}

/// An exact real number that is either rational or `6 − 4√2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exact {
    Rational(Rational),
    SixMinusFourSqrt2,
}

impl Exact {
    pub fn to_f64(&self) -> f64 {
        match self {
            Exact::Rational(r) => rational::to_f64(r),
            Exact::SixMinusFourSqrt2 => 6.0 - 4.0 * std::f64::consts::SQRT_2,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Exact::Rational(r) => Some(*r),
            Exact::SixMinusFourSqrt2 => None,
        }
    }
}

/// `6 − 4√2` against a rational `r`, decided exactly:
/// `6 − 4√2 < r` iff `6 − r < 4√2` iff `6 − r < 0` or `(6 − r)² < 32`.
fn cmp_irrational(r: &Rational) -> Ordering {
    let t = rational::int(6) - *r;
    if t.is_negative() || t * t < rational::int(32) {
        Ordering::Less
    } else {
        // equality is impossible since √2 is irrational
        Ordering::Greater
    }
}

impl Ord for Exact {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exact::Rational(x), Exact::Rational(y)) => x.cmp(y),
            (Exact::SixMinusFourSqrt2, Exact::SixMinusFourSqrt2) => Ordering::Equal,
            (Exact::SixMinusFourSqrt2, Exact::Rational(r)) => cmp_irrational(r),
            (Exact::Rational(r), Exact::SixMinusFourSqrt2) => cmp_irrational(r).reverse(),
        }
    }
}

impl PartialOrd for Exact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Rational(r) => write!(f, "{}", rational::to_string(r)),
            Exact::SixMinusFourSqrt2 => write!(f, "6-4*sqrt(2)"),
        }
    }
}

/// The six lower-bound constructions for perfect `K_{a,b,c}`-tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Barrier {
    SpaceI,
    SpaceII,
    DivI,
    DivII,
    DivIII,
    Tiling,
}

impl Barrier {
    pub const ALL: [Barrier; 6] = [
        Barrier::SpaceI,
        Barrier::SpaceII,
        Barrier::DivI,
        Barrier::DivII,
        Barrier::DivIII,
        Barrier::Tiling,
    ];

    /// Short name used on the command line.
    pub fn code(&self) -> &'static str {
        match self {
            Barrier::SpaceI => "s1",
            Barrier::SpaceII => "s2",
            Barrier::DivI => "d1",
            Barrier::DivII => "d2",
            Barrier::DivIII => "d3",
            Barrier::Tiling => "t",
        }
    }

    pub fn from_code(s: &str) -> Option<Barrier> {
        Barrier::ALL.into_iter().find(|b| b.code() == s)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Barrier::SpaceI => "space barrier I",
            Barrier::SpaceII => "space barrier II",
            Barrier::DivI => "divisibility barrier I",
            Barrier::DivII => "divisibility barrier II",
            Barrier::DivIII => "divisibility barrier III",
            Barrier::Tiling => "tiling barrier",
        }
    }
}

impl fmt::Display for Barrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The piecewise coefficient `f(a,b,c)`.
pub fn f_coefficient(spec: &KSpec) -> Exact {
    if spec.g == 1 && spec.d == 1 {
        if spec.a == 1 {
            Exact::Rational(q(1, 4))
        } else {
            Exact::SixMinusFourSqrt2
        }
    } else if spec.g == 1 && spec.d >= 3 && spec.d % 2 == 1 {
        Exact::Rational(q(4, 9))
    } else {
        Exact::Rational(q(1, 2))
    }
}

/// The construction whose degree tends to `f(a,b,c)`.
pub fn f_barrier(f: &Exact) -> Barrier {
    match f {
        Exact::SixMinusFourSqrt2 => Barrier::Tiling,
        Exact::Rational(r) if *r == q(1, 4) => Barrier::DivI,
        Exact::Rational(r) if *r == q(4, 9) => Barrier::DivIII,
        Exact::Rational(_) => Barrier::DivII,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub spec: KSpec,
    pub f: Exact,
    /// `1 − ((b+c)/k)²`.
    pub space1: Rational,
    /// `((a+b)/k)²`.
    pub space2: Rational,
    pub coefficient: Exact,
    /// Every construction attaining `coefficient`.
    pub dominant: Vec<Barrier>,
}

pub fn space1_coefficient(spec: &KSpec) -> Rational {
    let r = q((spec.b + spec.c) as i128, spec.k as i128);
    rational::int(1) - r * r
}

pub fn space2_coefficient(spec: &KSpec) -> Rational {
    let r = q((spec.a + spec.b) as i128, spec.k as i128);
    r * r
}

/// `max{f, 1 − ((b+c)/k)², ((a+b)/k)²}`, the asymptotic minimum vertex degree
/// threshold (as a fraction of `C(n,2)`) for a perfect `K_{a,b,c}`-tiling.
pub fn threshold_coefficient(spec: &KSpec) -> ThresholdReport {
    let f = f_coefficient(spec);
    let space1 = space1_coefficient(spec);
    let space2 = space2_coefficient(spec);
    let candidates = [
        (Exact::Rational(space1), Barrier::SpaceI),
        (Exact::Rational(space2), Barrier::SpaceII),
        (f, f_barrier(&f)),
    ];
    let coefficient = candidates.iter().map(|c| c.0).max().expect("nonempty");
    let mut dominant: Vec<Barrier> = candidates
        .iter()
        .filter(|c| c.0 == coefficient)
        .map(|c| c.1)
        .collect();
    dominant.sort();
    dominant.dedup();
    ThresholdReport {
        spec: *spec,
        f,
        space1,
        space2,
        coefficient,
        dominant,
    }
}

fn smallest_prime_factor(d: u64) -> u64 {
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    d
}

/// Asymptotic minimum codegree threshold coefficient for a `K_{a,b,c}`-factor.
pub fn codegree_coefficient(spec: &KSpec) -> Rational {
    let ak = q(spec.a as i128, spec.k as i128);
    match spec.type_class {
        TypeClass::Type0 => q(1, 2),
        TypeClass::TypeD(1) => ak,
        TypeClass::TypeD(d) => ak.max(q(1, smallest_prime_factor(d) as i128)),
    }
}

/// Whether `gcd(a+b, a+c, b+c) = 1`.
pub fn check_gcd_fact(a: u64, b: u64, c: u64) -> bool {
    (a + b).gcd(&(a + c)).gcd(&(b + c)) == 1
}
