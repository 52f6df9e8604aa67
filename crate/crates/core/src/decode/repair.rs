use super::{min_weight_pairing, Partner};
use crate::code::CssCode;
use crate::gf2::BitVector;
use crate::graph::{CheckGraph, ShortestPaths, NONE};
use crate::{Error, Result};

/// Projects a noisy edge syndrome of a 4D code onto the closest cycle
/// (∂₁s = 0) by matching the endpoints of broken syndrome strings.
#[derive(Clone, Debug)]
pub struct SyndromeRepair {
    graph: CheckGraph,
    paths: ShortestPaths,
    nontrivial_cycles: bool,
}

impl SyndromeRepair {
    pub fn new(code: &CssCode) -> Result<Self> {
        if code.qubit_level() != 2 || code.complex().dimension() != 4 {
            return Err(Error::InvalidInput("syndrome repair needs a 4D code with qubits on faces".into()));
        }
        let graph = CheckGraph::from_checks(code.complex().boundary(1))?;
        let paths = ShortestPaths::new(&graph);
        let nontrivial_cycles = code.complex().betti(1) > 0;
        Ok(Self { graph, paths, nontrivial_cycles })
    }

    /// True when repaired syndromes can differ from valid ones by a nontrivial 1-cycle.
    pub fn may_be_nontrivial(&self) -> bool {
        self.nontrivial_cycles
    }

    pub fn repair(&self, measured: &BitVector) -> Result<BitVector> {
        if measured.len() != self.graph.edges() {
            return Err(Error::DimensionMismatch { expected: self.graph.edges(), found: measured.len() });
        }
        let mut odd = vec![false; self.graph.node_count()];
        for e in measured.ones() {
            let (u, v) = self.graph.ends(e);
            odd[u] ^= true;
            odd[v] ^= true;
        }
        let marks: Vec<usize> = (0..self.graph.nodes()).filter(|&v| odd[v]).collect();
        let boundary = self.graph.boundary();
        let to_b = |i: usize| boundary.map_or(NONE, |b| self.paths.dist(marks[i], b));
        let to_boundary: Option<&dyn Fn(usize) -> u32> = if boundary.is_some() { Some(&to_b) } else { None };
        let partners = min_weight_pairing(marks.len(), |i, j| self.paths.dist(marks[i], marks[j]), to_boundary)?;
        let mut out = measured.clone();
        for (i, p) in partners.iter().enumerate() {
            let target = match *p {
                Partner::Node(j) if j > i => marks[j],
                Partner::Boundary => boundary.expect("boundary partner needs a boundary"),
                _ => continue,
            };
            for e in self.paths.path(&self.graph, marks[i], target) {
                out.flip(e);
            }
        }
        Ok(out)
    }
}

pub fn repair_syndrome_4d(code: &CssCode, measured: &BitVector) -> Result<BitVector> {
    SyndromeRepair::new(code)?.repair(measured)
}
