use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Requested lattice geometry: grid extents and site spacing in nm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    pub dims: (usize, usize, usize),
    pub spacing_nm: f64,
}

impl LatticeSpec {
    pub fn new(dims: (usize, usize, usize), spacing_nm: f64) -> Self {
        LatticeSpec { dims, spacing_nm }
    }

    pub fn num_sites(&self) -> usize {
        self.dims.0 * self.dims.1 * self.dims.2
    }

    fn validate(&self) -> Result<()> {
        let (nx, ny, nz) = self.dims;
        for (name, n) in [("dims.nx", nx), ("dims.ny", ny), ("dims.nz", nz)] {
            if n == 0 {
                return Err(Error::validation(name, "lattice dimension must be >= 1"));
            }
        }
        if !(self.spacing_nm > 0.0) {
            return Err(Error::validation(
                "spacing_nm",
                format!("spacing must be > 0, got {}", self.spacing_nm),
            ));
        }
        Ok(())
    }
}

/// Finite rectangular lattice with open boundaries.
///
/// Sites are ordered row-major: linear index of (ix, iy, iz) is
/// `ix + nx*(iy + ny*iz)`. Neighbor pairs are axis-adjacent sites
/// stored once with i < j.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub dims: (usize, usize, usize),
    pub spacing_nm: f64,
    pub positions: Vec<Vector3<f64>>,
    pub neighbor_pairs: Vec<(usize, usize)>,
}

impl Lattice {
    pub fn num_sites(&self) -> usize {
        self.positions.len()
    }

    pub fn linear_index(&self, ix: usize, iy: usize, iz: usize) -> usize {
        let (nx, ny, _) = self.dims;
        ix + nx * (iy + ny * iz)
    }

    /// Axis-aligned bounding box of the site positions.
    pub fn bounding_box(&self) -> (Vector3<f64>, Vector3<f64>) {
        let (nx, ny, nz) = self.dims;
        let hi = Vector3::new(
            (nx - 1) as f64 * self.spacing_nm,
            (ny - 1) as f64 * self.spacing_nm,
            (nz - 1) as f64 * self.spacing_nm,
        );
        (Vector3::zeros(), hi)
    }

    /// Geometric center of the lattice.
    pub fn center(&self) -> Vector3<f64> {
        let (lo, hi) = self.bounding_box();
        (lo + hi) * 0.5
    }

    /// Permutation sending each site to its mirror image through the
    /// lattice midplane perpendicular to `axis` (0 = x, 1 = y, 2 = z).
    pub fn mirror_permutation(&self, axis: usize) -> Vec<usize> {
        let (nx, ny, nz) = self.dims;
        let mut perm = vec![0usize; self.num_sites()];
        for iz in 0..nz {
            for iy in 0..ny {
                for ix in 0..nx {
                    let (mx, my, mz) = match axis {
                        0 => (nx - 1 - ix, iy, iz),
                        1 => (ix, ny - 1 - iy, iz),
                        _ => (ix, iy, nz - 1 - iz),
                    };
                    perm[self.linear_index(ix, iy, iz)] = self.linear_index(mx, my, mz);
                }
            }
        }
        perm
    }
}

/// Lay out the rectangular grid and enumerate nearest-neighbor pairs.
///
/// Pair count is (nx-1)*ny*nz + nx*(ny-1)*nz + nx*ny*(nz-1).
pub fn build_lattice(spec: &LatticeSpec) -> Result<Lattice> {
    spec.validate()?;
    let (nx, ny, nz) = spec.dims;
    let a = spec.spacing_nm;
    let n = spec.num_sites();

    let mut positions = Vec::with_capacity(n);
    for iz in 0..nz {
        for iy in 0..ny {
            for ix in 0..nx {
                positions.push(Vector3::new(ix as f64 * a, iy as f64 * a, iz as f64 * a));
            }
        }
    }

    // With row-major ordering every +x/+y/+z neighbor has a larger
    // linear index, so (i, j) with i < j comes for free.
    let idx = |ix: usize, iy: usize, iz: usize| ix + nx * (iy + ny * iz);
    let mut neighbor_pairs = Vec::new();
    for iz in 0..nz {
        for iy in 0..ny {
            for ix in 0..nx {
                let i = idx(ix, iy, iz);
                if ix + 1 < nx {
                    neighbor_pairs.push((i, idx(ix + 1, iy, iz)));
                }
                if iy + 1 < ny {
                    neighbor_pairs.push((i, idx(ix, iy + 1, iz)));
                }
                if iz + 1 < nz {
                    neighbor_pairs.push((i, idx(ix, iy, iz + 1)));
                }
            }
        }
    }

    Ok(Lattice {
        dims: spec.dims,
        spacing_nm: a,
        positions,
        neighbor_pairs,
    })
}
