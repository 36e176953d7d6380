//! Segre value of a single reduction, computed as the pairing of its
//! numerical type with `det ι`.
//!
//! This is `deg σ*T_π` for one reduction `σ`. The Segre invariant of a
//! bundle is the minimum of this over all reductions, which depends on the
//! bundle and not only on numerical data, so it is not computed here.

use crate::error::{Error, Result};
use crate::lattice::{pairing, Cocharacter};
use crate::parabolic::NumericalType;

/// Torus coordinates of a numerical type: block degree `d_i` is placed on
/// the first coordinate of its GL block, zeros elsewhere.
pub fn expand_to_torus(d: &NumericalType) -> Result<Cocharacter> {
    let p = d.parabolic();
    let mut v = vec![0i64; p.group().ambient_rank()];
    for (block, &deg) in p.gl_blocks().iter().zip(d.block_degrees()) {
        // first sign is normalised to +1, so the block determinant pairs to `deg`
        v[block.coords[0]] = deg * block.signs[0];
    }
    Cocharacter::new(v)
}

pub fn segre_value(d: &NumericalType) -> Result<i64> {
    let p = d.parabolic();
    if !p.is_proper() {
        return Err(Error::DegenerateParabolic);
    }
    let det_iota = p.isotropy_det_char()?;
    pairing(&det_iota, &expand_to_torus(d)?)
}
