//! Constructions of the test-corpus groups.
//!
//! Names follow a small grammar: factors joined by `x`, each factor a base
//! name optionally raised to a power (`C2^3`). Base names are `C<n>` (cyclic),
//! `D<n>` (dihedral), `Q<n>` (generalized quaternion), `SD<n>`
//! (semidihedral), `M<n>` (modular with a cyclic maximal subgroup), `He<p>`
//! (Heisenberg group over F_p) and `ES<n>` (extraspecial of order `n`, the
//! central product of Heisenberg groups).

use std::str::FromStr;

use super::{PGroup, MAX_ORDER};
use crate::error::{Error, Result};
use crate::linalg::Prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    Quaternion,
    Semidihedral,
    ModularMaximalCyclic,
    Heisenberg,
    Extraspecial,
    DirectProduct,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cyclic" => Family::Cyclic,
            "abelian" => Family::Abelian,
            "dihedral" => Family::Dihedral,
            "quaternion" => Family::Quaternion,
            "semidihedral" => Family::Semidihedral,
            "modular_maximal_cyclic" => Family::ModularMaximalCyclic,
            "heisenberg" => Family::Heisenberg,
            "extraspecial" => Family::Extraspecial,
            "direct_product" => Family::DirectProduct,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

fn invalid(family: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams { family: family.to_string(), reason: reason.into() }
}

/// Builds a member of an integer-parameterised family.
///
/// | family | params |
/// |---|---|
/// | `cyclic` | `p, n` (order `p^n`) |
/// | `abelian` | `p, e_1, e_2, …` |
/// | `dihedral`, `quaternion`, `semidihedral` | `order` |
/// | `modular_maximal_cyclic` | `p, n` |
/// | `heisenberg` | `p` |
/// | `extraspecial` | `p, n` (order `p^{1+2n}`) |
///
/// `direct_product` takes groups rather than integers; use
/// [`direct_product`] or a product name with [`build_named`].
pub fn catalog_build(family: &str, params: &[u32]) -> Result<PGroup> {
    let fam: Family = family.parse()?;
    let need = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(invalid(family, format!("expected {k} parameters, got {}", params.len())))
        }
    };
    match fam {
        Family::Cyclic => {
            need(2)?;
            let p = Prime::new(params[0])?;
            cyclic(p, checked_pow(family, p, params[1])?)
        }
        Family::Abelian => {
            let (&p, exps) = params.split_first().ok_or_else(|| invalid(family, "missing prime"))?;
            let p = Prime::new(p)?;
            let mut g = cyclic(p, 1)?;
            for &e in exps {
                g = direct_product(&g, &cyclic(p, checked_pow(family, p, e)?)?)?;
            }
            Ok(g.with_name(abelian_name(p, exps)))
        }
        Family::Dihedral => {
            need(1)?;
            dihedral(params[0] as usize)
        }
        Family::Quaternion => {
            need(1)?;
            quaternion(params[0] as usize)
        }
        Family::Semidihedral => {
            need(1)?;
            semidihedral(params[0] as usize)
        }
        Family::ModularMaximalCyclic => {
            need(2)?;
            let p = Prime::new(params[0])?;
            modular(p, checked_pow(family, p, params[1])?)
        }
        Family::Heisenberg => {
            need(1)?;
            extraspecial(Prime::new(params[0])?, 1).map(|g| g.with_name(format!("He{}", params[0])))
        }
        Family::Extraspecial => {
            need(2)?;
            extraspecial(Prime::new(params[0])?, params[1])
        }
        Family::DirectProduct => Err(invalid(family, "direct_product takes groups; use direct_product()")),
    }
}

fn checked_pow(family: &str, p: Prime, n: u32) -> Result<usize> {
    let order = (p.get() as u64).checked_pow(n).filter(|&o| o <= MAX_ORDER as u64);
    order.map(|o| o as usize).ok_or_else(|| invalid(family, format!("order {}^{n} exceeds {MAX_ORDER}", p)))
}

fn abelian_name(p: Prime, exps: &[u32]) -> String {
    if exps.is_empty() {
        return "C1".into();
    }
    exps.iter().map(|&e| format!("C{}", p.pow(e))).collect::<Vec<_>>().join("x")
}

fn prime_of(family: &str, n: usize) -> Result<Prime> {
    for p in [Prime::TWO, Prime::THREE, Prime::FIVE] {
        if n > 1 && p.log(n).is_some() {
            return Ok(p);
        }
    }
    Err(invalid(family, format!("order {n} is not a power of 2, 3 or 5")))
}

fn check_size(family: &str, n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, limit: MAX_ORDER });
    }
    if n == 0 {
        return Err(invalid(family, "order must be positive"));
    }
    Ok(())
}

pub fn cyclic(p: Prime, n: usize) -> Result<PGroup> {
    check_size("cyclic", n)?;
    PGroup::from_fn(p, n, format!("C{n}"), |a, b| (a + b) % n)
}

/// `⟨a, b | a^m, b^q = a^t, b a b^{-1} = a^r⟩`, element `a^i b^j` at index
/// `i + m j`.
fn metacyclic(p: Prime, m: usize, q: usize, r: usize, t: usize, name: String) -> Result<PGroup> {
    let mut rpow = vec![1usize; q];
    for j in 1..q {
        rpow[j] = rpow[j - 1] * r % m;
    }
    PGroup::from_fn(p, m * q, name, |x, y| {
        let (i, j) = (x % m, x / m);
        let (k, l) = (y % m, y / m);
        let mut a = i + k * rpow[j];
        let mut b = j + l;
        if b >= q {
            b -= q;
            a += t;
        }
        a % m + m * b
    })
}

pub fn dihedral(n: usize) -> Result<PGroup> {
    check_size("dihedral", n)?;
    if n < 4 || Prime::TWO.log(n).is_none() {
        return Err(invalid("dihedral", format!("order {n} must be a power of 2, at least 4")));
    }
    let m = n / 2;
    metacyclic(Prime::TWO, m, 2, m - 1, 0, format!("D{n}"))
}

pub fn quaternion(n: usize) -> Result<PGroup> {
    check_size("quaternion", n)?;
    if n < 8 || Prime::TWO.log(n).is_none() {
        return Err(invalid("quaternion", format!("order {n} must be a power of 2, at least 8")));
    }
    let m = n / 2;
    metacyclic(Prime::TWO, m, 2, m - 1, m / 2, format!("Q{n}"))
}

pub fn semidihedral(n: usize) -> Result<PGroup> {
    check_size("semidihedral", n)?;
    if n < 16 || Prime::TWO.log(n).is_none() {
        return Err(invalid("semidihedral", format!("order {n} must be a power of 2, at least 16")));
    }
    let m = n / 2;
    metacyclic(Prime::TWO, m, 2, m / 2 - 1, 0, format!("SD{n}"))
}

/// `⟨a, b | a^{p^{n-1}}, b^p, b a b^{-1} = a^{1+p^{n-2}}⟩`.
pub fn modular(p: Prime, n: usize) -> Result<PGroup> {
    check_size("modular_maximal_cyclic", n)?;
    let k = p.log(n).ok_or_else(|| invalid("modular_maximal_cyclic", "order is not a power of p"))?;
    let min = if p == Prime::TWO { 4 } else { 3 };
    if k < min {
        return Err(invalid("modular_maximal_cyclic", format!("need order at least {}", p.pow(min))));
    }
    let pp = p.get() as usize;
    let m = n / pp;
    metacyclic(p, m, pp, 1 + m / pp, 0, format!("M{n}"))
}

/// Central product of `n` Heisenberg groups: triples `(z, x, y)` with
/// `x, y ∈ F_p^n` and `(z,x,y)(z',x',y') = (z+z'+x·y', x+x', y+y')`.
pub fn extraspecial(p: Prime, n: u32) -> Result<PGroup> {
    if n == 0 {
        return Err(invalid("extraspecial", "n must be positive"));
    }
    let order = (p.get() as u64).pow(1 + 2 * n);
    if order > MAX_ORDER as u64 {
        return Err(Error::OrderTooLarge { order: order as usize, limit: MAX_ORDER });
    }
    let pp = p.get() as usize;
    let n = n as usize;
    let decode = |mut g: usize| {
        let z = g % pp;
        g /= pp;
        let mut x = vec![0; n];
        let mut y = vec![0; n];
        for v in x.iter_mut().chain(y.iter_mut()) {
            *v = g % pp;
            g /= pp;
        }
        (z, x, y)
    };
    let encode = |z: usize, x: &[usize], y: &[usize]| {
        let mut g = 0;
        for &v in x.iter().chain(y).rev() {
            g = g * pp + v;
        }
        g * pp + z
    };
    PGroup::from_fn(p, order as usize, format!("ES{order}"), |a, b| {
        let (z1, x1, y1) = decode(a);
        let (z2, x2, y2) = decode(b);
        let dot: usize = x1.iter().zip(&y2).map(|(u, v)| u * v).sum();
        let x: Vec<usize> = x1.iter().zip(&x2).map(|(u, v)| (u + v) % pp).collect();
        let y: Vec<usize> = y1.iter().zip(&y2).map(|(u, v)| (u + v) % pp).collect();
        encode((z1 + z2 + dot) % pp, &x, &y)
    })
}

/// External direct product, element `(g, h)` at index `g·|H| + h`.
pub fn direct_product(a: &PGroup, b: &PGroup) -> Result<PGroup> {
    if a.p() != b.p() {
        return Err(Error::PrimeMismatch(a.p().get(), b.p().get()));
    }
    let (m, n) = (a.order(), b.order());
    check_size("direct_product", m * n)?;
    if m == 1 {
        return Ok(b.clone());
    }
    if n == 1 {
        return Ok(a.clone());
    }
    PGroup::derived_from_fn(a.p(), m * n, format!("{}x{}", a.name(), b.name()), |x, y| {
        a.mul(x / n, y / n) * n + b.mul(x % n, y % n)
    })
}

fn parse_order(name: &str, digits: &str) -> Result<usize> {
    digits.parse::<usize>().map_err(|_| Error::Parse(format!("bad group name `{name}`")))
}

fn build_base(name: &str) -> Result<PGroup> {
    let (prefix, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
    match prefix {
        "C" => {
            let n = parse_order(name, digits)?;
            if n == 1 {
                return PGroup::from_fn(Prime::TWO, 1, "C1", |_, _| 0);
            }
            cyclic(prime_of("cyclic", n)?, n)
        }
        "D" => dihedral(parse_order(name, digits)?),
        "Q" => quaternion(parse_order(name, digits)?),
        "SD" => semidihedral(parse_order(name, digits)?),
        "M" => {
            let n = parse_order(name, digits)?;
            modular(prime_of("modular_maximal_cyclic", n)?, n)
        }
        "He" => catalog_build("heisenberg", &[parse_order(name, digits)? as u32]),
        "ES" => {
            let n = parse_order(name, digits)?;
            let p = prime_of("extraspecial", n)?;
            let k = p.log(n).unwrap();
            if k < 3 || k % 2 == 0 {
                return Err(invalid("extraspecial", format!("order {n} is not p^(1+2n)")));
            }
            extraspecial(p, (k - 1) / 2)
        }
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// Builds a group from a catalog-style name such as `C2xD8` or `C3^3`.
pub fn build_named(name: &str) -> Result<PGroup> {
    let mut acc: Option<PGroup> = None;
    for factor in name.split('x') {
        let (base, power) = match factor.split_once('^') {
            Some((b, k)) => (b, k.parse::<u32>().map_err(|_| Error::Parse(format!("bad power in `{name}`")))?),
            None => (factor, 1),
        };
        let g = build_base(base)?;
        for _ in 0..power {
            acc = Some(match acc {
                None => g.clone(),
                Some(a) => direct_product(&a, &g)?,
            });
        }
    }
    let g = acc.ok_or_else(|| Error::Parse("empty group name".into()))?;
    Ok(g.with_name(name))
}

/// A named member of the built-in catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub p: u32,
    pub order: usize,
}

impl CatalogEntry {
    pub fn build(&self) -> PGroup {
        build_named(self.name).expect("catalog entries are valid")
    }
}

const ENTRIES: &[(&str, u32, usize)] = &[
    ("C1", 2, 1),
    ("C2", 2, 2),
    ("C4", 2, 4),
    ("C2^2", 2, 4),
    ("C8", 2, 8),
    ("C2xC4", 2, 8),
    ("C2^3", 2, 8),
    ("D8", 2, 8),
    ("Q8", 2, 8),
    ("He2", 2, 8),
    ("C16", 2, 16),
    ("C2xC8", 2, 16),
    ("C4^2", 2, 16),
    ("C2^2xC4", 2, 16),
    ("C2^4", 2, 16),
    ("D16", 2, 16),
    ("Q16", 2, 16),
    ("SD16", 2, 16),
    ("M16", 2, 16),
    ("C2xD8", 2, 16),
    ("C2xQ8", 2, 16),
    ("C32", 2, 32),
    ("C2xC16", 2, 32),
    ("C4xC8", 2, 32),
    ("C2^2xC8", 2, 32),
    ("C2xC4^2", 2, 32),
    ("C2^3xC4", 2, 32),
    ("C2^5", 2, 32),
    ("D32", 2, 32),
    ("Q32", 2, 32),
    ("SD32", 2, 32),
    ("M32", 2, 32),
    ("C2xD16", 2, 32),
    ("C2xQ16", 2, 32),
    ("C2xSD16", 2, 32),
    ("C2xM16", 2, 32),
    ("C4xD8", 2, 32),
    ("C4xQ8", 2, 32),
    ("C2^2xD8", 2, 32),
    ("C2^2xQ8", 2, 32),
    ("ES32", 2, 32),
    ("C64", 2, 64),
    ("C8^2", 2, 64),
    ("C4^3", 2, 64),
    ("C2^6", 2, 64),
    ("C2xC4xC8", 2, 64),
    ("D64", 2, 64),
    ("Q64", 2, 64),
    ("SD64", 2, 64),
    ("M64", 2, 64),
    ("C8xD8", 2, 64),
    ("C8xQ8", 2, 64),
    ("C4xD16", 2, 64),
    ("C4xM16", 2, 64),
    ("D8xD8", 2, 64),
    ("D8xQ8", 2, 64),
    ("Q8xQ8", 2, 64),
    ("C2xES32", 2, 64),
    ("C2^3xD8", 2, 64),
    ("C3", 3, 3),
    ("C9", 3, 9),
    ("C3^2", 3, 9),
    ("C27", 3, 27),
    ("C3xC9", 3, 27),
    ("C3^3", 3, 27),
    ("He3", 3, 27),
    ("M27", 3, 27),
    ("C81", 3, 81),
    ("C9^2", 3, 81),
    ("C3xC27", 3, 81),
    ("C3^4", 3, 81),
    ("C3xHe3", 3, 81),
    ("C3xM27", 3, 81),
    ("C9xC27", 3, 243),
    ("ES243", 3, 243),
    ("C5", 5, 5),
    ("C25", 5, 25),
    ("C5^2", 5, 25),
    ("He5", 5, 125),
    ("M125", 5, 125),
];

/// Built-in catalog, optionally restricted to one prime, up to `max_order`.
pub fn catalog(p: Option<u32>, max_order: usize) -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .filter(|(_, q, n)| p.is_none_or(|p| p == *q) && *n <= max_order)
        .map(|&(name, p, order)| CatalogEntry { name, p, order })
        .collect()
}
