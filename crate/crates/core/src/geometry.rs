//! The discrete projective geometry on `n` points and its mosaic plasma.
//!
//! Pipeline: collinearity, line hyperoperation, closure, pointed closure,
//! mosaic. Each stage is exposed on its own.

use crate::error::{Error, Result};
use crate::finset::{Subset, MAX_AMBIENT};
use crate::plasma::{self, Plasma};

pub const PROJECTIVE_MAX: usize = 8;

/// Points `{1..n}`; three points are collinear iff at most two are distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscreteGeometry {
    n: usize,
}

impl DiscreteGeometry {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::CeilingExceeded { what: "geometry", n, max: MAX_AMBIENT });
        }
        Ok(DiscreteGeometry { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.n {
            return Err(Error::IndexOutOfRange { what: "point", index: x, limit: self.n });
        }
        Ok(())
    }

    pub fn collinear(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        for p in [x, y, z] {
            self.check_point(p)?;
        }
        Ok(x == y || y == z || x == z)
    }
}

/// `{z : (z,x,y) collinear}` for `x ≠ y`, and `{x}` for `x = y`.
pub fn line_hyperop(g: &DiscreteGeometry, x: usize, y: usize) -> Result<Subset> {
    g.check_point(x)?;
    g.check_point(y)?;
    if x == y {
        return Subset::unpointed(g.n, &[x]);
    }
    let mut line = Vec::new();
    for z in 1..=g.n {
        if g.collinear(z, x, y)? {
            line.push(z);
        }
    }
    Subset::unpointed(g.n, &line)
}

/// The closure `C` on `{1..n}` and its pointed extension `C⁺` on `{0..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointedClosure {
    n: usize,
}

/// Every subset of the discrete geometry is a subspace, so `C` is the identity.
pub fn closure_operator(g: &DiscreteGeometry) -> PointedClosure {
    PointedClosure { n: g.n }
}

impl PointedClosure {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `C` on an unpointed mask (element `i` at bit `i-1`).
    pub fn close(&self, mask: u32) -> u32 {
        mask
    }

    /// `C⁺(A) = C(A∖{0}) ∪ {0}` for nonempty `A`, `C⁺(∅) = ∅`. Pointed masks.
    pub fn close_pointed(&self, mask: u32) -> u32 {
        if mask == 0 {
            0
        } else {
            (self.close(mask >> 1) << 1) | 1
        }
    }
}

/// `0⊞x = {x}`, `x⊞x = C⁺{x}`, and for distinct nonzero `x, y` the points of
/// `C⁺{x,y}` outside `C⁺{x} ∪ C⁺{y}`.
pub fn mosaic_plasma(g: &DiscreteGeometry) -> Result<Plasma> {
    let size = g.n + 1;
    if size > plasma::MAX_CARRIER || g.n >= 31 {
        return Err(Error::CeilingExceeded { what: "mosaic carrier", n: size, max: plasma::MAX_CARRIER });
    }
    let c = closure_operator(g);
    let to_elements = |mask: u32| -> u128 { (0..32).filter(|b| mask >> b & 1 == 1).fold(0, |acc, b| acc | 1u128 << b) };
    let table = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| {
                    if x == 0 || y == 0 {
                        1u128 << (x | y)
                    } else if x == y {
                        to_elements(c.close_pointed(1 << x))
                    } else {
                        let span = c.close_pointed(1 << x | 1 << y);
                        to_elements(span & !(c.close_pointed(1 << x) | c.close_pointed(1 << y)))
                    }
                })
                .collect()
        })
        .collect();
    Plasma::new(size, 0, table)
}

/// An isomorphism from the mosaic of `n` points to `∨ₙK`, if one exists.
pub fn projective_isomorphism(n: usize) -> Result<Option<Vec<u8>>> {
    if n > PROJECTIVE_MAX {
        return Err(Error::CeilingExceeded { what: "projective geometry", n, max: PROJECTIVE_MAX });
    }
    let mosaic = mosaic_plasma(&DiscreteGeometry::new(n)?)?;
    let wedge = plasma::wedge_of_krasner(n)?;
    plasma::are_isomorphic(&mosaic, &wedge, plasma::DEFAULT_ISO_CEILING)
}
