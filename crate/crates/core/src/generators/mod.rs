//! Counterexample families and auxiliary instance generators.
//!
//! Every family instance checks its published degree and connectivity facts
//! when it is built; a mismatch is a [`Construction`](crate::Error::Construction)
//! error rather than a silently wrong graph.

mod embedding;
mod families;
mod planar;

use std::collections::BTreeMap;
use std::fmt;

pub use embedding::{faces, is_plane, share_face, Point};
pub use families::{gen_fl, gen_gt, gen_hl};
pub use planar::{
    antiprism, gen_random_planar, prism, random_planar_instance, sample_roots, wheel, PlaneFixture,
};

use crate::connectivity::{kappa_x, RootedGraph};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::io::Names;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gt,
    Fl,
    Hl,
    RandomPlanar,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gt => "GT",
            Family::Fl => "FL",
            Family::Hl => "HL",
            Family::RandomPlanar => "RANDOM_PLANAR",
        })
    }
}

/// Numeric facts a family instance must satisfy. Roots are the white
/// vertices, all others are black.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Facts {
    pub white_count: usize,
    pub black_count: usize,
    pub white_degree: Option<usize>,
    /// Inclusive range of black degrees.
    pub black_degree: Option<(usize, usize)>,
    pub kappa: usize,
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub rooted: RootedGraph,
    pub family: Family,
    pub params: Vec<usize>,
    pub facts: Facts,
    pub names: Names,
    /// Straight-line drawing, when the construction has one.
    pub positions: Option<BTreeMap<VertexId, Point>>,
}

impl FamilyInstance {
    /// Re-checks every fact; also planarity of the drawing and a common face
    /// for the roots when positions are known.
    pub fn validate(&self) -> Result<()> {
        let g = self.rooted.graph();
        let roots = self.rooted.roots();
        let fail = |what: String| {
            Err(Error::Construction(format!(
                "{} {:?}: {what}",
                self.family, self.params
            )))
        };
        let f = &self.facts;
        if roots.len() != f.white_count || g.vertex_count() - roots.len() != f.black_count {
            return fail(format!(
                "{} white and {} black vertices, expected {} and {}",
                roots.len(),
                g.vertex_count() - roots.len(),
                f.white_count,
                f.black_count
            ));
        }
        if let Some(d) = f.white_degree {
            if let Some(x) = roots.iter().find(|&&x| g.degree(x) != d) {
                return fail(format!(
                    "white {} has degree {}, expected {d}",
                    self.names.name(*x),
                    g.degree(*x)
                ));
            }
        }
        if let Some((lo, hi)) = f.black_degree {
            let bad = g
                .vertices()
                .filter(|v| !roots.contains(v))
                .find(|&v| !(lo..=hi).contains(&g.degree(v)));
            if let Some(v) = bad {
                return fail(format!(
                    "black {} has degree {}",
                    self.names.name(v),
                    g.degree(v)
                ));
            }
        }
        let k = kappa_x(&self.rooted);
        if k != f.kappa {
            return fail(format!("kappa_x = {k}, expected {}", f.kappa));
        }
        if let Some(pos) = &self.positions {
            if !is_plane(g, pos) {
                return fail("drawing is not plane".into());
            }
            if !share_face(g, pos, roots) {
                return fail("roots do not share a face".into());
            }
        }
        Ok(())
    }
}
