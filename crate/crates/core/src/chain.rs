//! Traces a value through a chain of the named bijections, recording every
//! intermediate object together with the statistic it carries (Des for
//! permutations, Peak for paths, hd for partitions). The statistic is the
//! same set at every stage, only its name changes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{
    boundary_path, partition_from_boundary, psi, psi_inverse, BoxSpec, Partition,
};
use crate::path::{dyck_to_s321, rho, rho_inverse, s321_to_dyck, xi, xi_inverse, LatticePath};
use crate::perm::Permutation;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ChainStage {
    Rho,
    RhoInv,
    Xi,
    XiInv,
    Psi,
    PsiInv,
    S321ToDyck,
    DyckToS321,
    Boundary,
    BoundaryInv,
}

impl ChainStage {
    pub fn name(&self) -> &'static str {
        match self {
            ChainStage::Rho => "rho",
            ChainStage::RhoInv => "rho-inv",
            ChainStage::Xi => "xi",
            ChainStage::XiInv => "xi-inv",
            ChainStage::Psi => "psi",
            ChainStage::PsiInv => "psi-inv",
            ChainStage::S321ToDyck => "s321",
            ChainStage::DyckToS321 => "s321-inv",
            ChainStage::Boundary => "boundary",
            ChainStage::BoundaryInv => "boundary-inv",
        }
    }
}

impl FromStr for ChainStage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        [
            ChainStage::Rho,
            ChainStage::RhoInv,
            ChainStage::Xi,
            ChainStage::XiInv,
            ChainStage::Psi,
            ChainStage::PsiInv,
            ChainStage::S321ToDyck,
            ChainStage::DyckToS321,
            ChainStage::Boundary,
            ChainStage::BoundaryInv,
        ]
        .into_iter()
        .find(|st| st.name() == norm)
        .ok_or(Error::Unknown {
            kind: "bijection",
            name: s.to_string(),
        })
    }
}

/// Parses a comma-separated chain such as "rho,xi,psi-inv".
pub fn parse_chain(text: &str) -> Result<Vec<ChainStage>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceObject {
    Perm(Permutation),
    Path(LatticePath),
    Partition(Partition),
}

impl TraceObject {
    pub fn kind(&self) -> &'static str {
        match self {
            TraceObject::Perm(_) => "permutation",
            TraceObject::Path(_) => "path",
            TraceObject::Partition(_) => "partition",
        }
    }

    /// The tracked statistic: Des, Peak, or hd.
    pub fn statistic(&self) -> (&'static str, Vec<usize>) {
        match self {
            TraceObject::Perm(p) => ("Des", p.descent_set()),
            TraceObject::Path(p) => ("Peak", p.peak_set()),
            TraceObject::Partition(p) => ("hd", p.hook_decomposition().hooks().to_vec()),
        }
    }
}

impl fmt::Display for TraceObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceObject::Perm(p) => write!(f, "{p}"),
            TraceObject::Path(p) => write!(f, "{p}"),
            TraceObject::Partition(p) => {
                if p.parts().is_empty() {
                    f.write_str("(empty)")
                } else {
                    write!(f, "{p}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    /// "input" for the starting object, otherwise the stage that produced it.
    pub stage: String,
    pub object: TraceObject,
    pub statistic_name: &'static str,
    pub statistic: Vec<usize>,
}

fn apply(stage: ChainStage, object: &TraceObject, box_n: usize) -> Result<TraceObject> {
    let wrong = |expected: &str| {
        Err(Error::Unsupported(format!(
            "stage {} expects a {expected}, got a {}",
            stage.name(),
            object.kind()
        )))
    };
    match (stage, object) {
        (ChainStage::Rho, TraceObject::Perm(p)) => Ok(TraceObject::Path(rho(p)?)),
        (ChainStage::Rho, _) => wrong("permutation"),
        (ChainStage::RhoInv, TraceObject::Path(p)) => Ok(TraceObject::Perm(rho_inverse(p)?)),
        (ChainStage::RhoInv, _) => wrong("path"),
        (ChainStage::Xi, TraceObject::Path(p)) => Ok(TraceObject::Path(xi(p)?)),
        (ChainStage::Xi, _) => wrong("path"),
        (ChainStage::XiInv, TraceObject::Path(p)) => Ok(TraceObject::Path(xi_inverse(p)?)),
        (ChainStage::XiInv, _) => wrong("path"),
        (ChainStage::Psi, TraceObject::Partition(p)) => {
            Ok(TraceObject::Path(psi(p, &BoxSpec::new(box_n))?))
        }
        (ChainStage::Psi, _) => wrong("partition"),
        (ChainStage::PsiInv, TraceObject::Path(p)) => Ok(TraceObject::Partition(psi_inverse(p)?)),
        (ChainStage::PsiInv, _) => wrong("path"),
        (ChainStage::S321ToDyck, TraceObject::Perm(p)) => Ok(TraceObject::Path(s321_to_dyck(p)?)),
        (ChainStage::S321ToDyck, _) => wrong("permutation"),
        (ChainStage::DyckToS321, TraceObject::Path(p)) => Ok(TraceObject::Perm(dyck_to_s321(p)?)),
        (ChainStage::DyckToS321, _) => wrong("path"),
        (ChainStage::Boundary, TraceObject::Partition(p)) => {
            Ok(TraceObject::Path(boundary_path(p, &BoxSpec::new(box_n))?))
        }
        (ChainStage::Boundary, _) => wrong("partition"),
        (ChainStage::BoundaryInv, TraceObject::Path(p)) => {
            Ok(TraceObject::Partition(partition_from_boundary(p)?))
        }
        (ChainStage::BoundaryInv, _) => wrong("path"),
    }
}

/// Runs `input` through the stages, returning the full trace including the
/// input itself. Box-dependent stages (ψ, boundary) use B_n for the size n of
/// the original input.
pub fn map_chain(input: TraceObject, stages: &[ChainStage]) -> Result<Vec<TraceEntry>> {
    let box_n = match &input {
        TraceObject::Perm(p) => p.n(),
        TraceObject::Path(p) => p.len(),
        TraceObject::Partition(_) => 0,
    };
    let mut entries = Vec::with_capacity(stages.len() + 1);
    let push = |entries: &mut Vec<TraceEntry>, stage: String, object: TraceObject| {
        let (statistic_name, statistic) = object.statistic();
        entries.push(TraceEntry {
            stage,
            object,
            statistic_name,
            statistic,
        });
    };
    push(&mut entries, "input".to_string(), input);
    for &stage in stages {
        let next = apply(stage, &entries.last().unwrap().object, box_n)?;
        push(&mut entries, stage.name().to_string(), next);
    }
    Ok(entries)
}
