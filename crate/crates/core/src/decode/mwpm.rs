use super::{min_weight_pairing, Classification, DecodeOutcome, Partner};
use crate::code::{CssCode, Pauli};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{CheckGraph, ShortestPaths, NONE};
use crate::{Error, Result};

/// Matching decoder for one error type of a code whose qubits touch at most
/// two relevant checks. Shortest paths are precomputed for every check pair.
#[derive(Clone, Debug)]
pub struct MwpmDecoder {
    graph: CheckGraph,
    paths: ShortestPaths,
}

impl MwpmDecoder {
    /// Decoder for errors of type `error_type` (Z errors are matched on the X-check graph).
    pub fn new(code: &CssCode, error_type: Pauli) -> Result<Self> {
        Self::from_checks(code.checks_for(error_type))
    }

    pub fn from_checks(checks: &BitMatrix) -> Result<Self> {
        let graph = CheckGraph::from_checks(checks)?;
        let paths = ShortestPaths::new(&graph);
        Ok(Self { graph, paths })
    }

    pub fn graph(&self) -> &CheckGraph {
        &self.graph
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.paths.dist(u, v)
    }

    fn boundary_distance(&self, u: usize) -> u32 {
        self.graph.boundary().map_or(NONE, |b| self.paths.dist(u, b))
    }

    fn pair(&self, marks: &[usize], time: Option<&[usize]>) -> Result<Vec<Partner>> {
        let dist = |i: usize, j: usize| {
            let d = self.paths.dist(marks[i], marks[j]);
            match (d, time) {
                (NONE, _) => NONE,
                (d, Some(t)) => d + t[i].abs_diff(t[j]) as u32,
                (d, None) => d,
            }
        };
        let boundary = |i: usize| self.boundary_distance(marks[i]);
        let to_boundary: Option<&dyn Fn(usize) -> u32> = if self.graph.boundary().is_some() { Some(&boundary) } else { None };
        min_weight_pairing(marks.len(), dist, to_boundary)
    }

    fn correction(&self, marks: &[usize], partners: &[Partner]) -> BitVector {
        let mut out = BitVector::zeros(self.graph.edges());
        for (i, p) in partners.iter().enumerate() {
            let target = match *p {
                Partner::Node(j) if j > i => marks[j],
                Partner::Boundary => self.graph.boundary().expect("boundary partner needs a boundary"),
                _ => continue,
            };
            for e in self.paths.path(&self.graph, marks[i], target) {
                out.flip(e);
            }
        }
        out
    }

    /// Correction whose syndrome equals `syndrome`, of minimum total weight.
    pub fn decode(&self, syndrome: &BitVector) -> Result<BitVector> {
        if syndrome.len() != self.graph.nodes() {
            return Err(Error::DimensionMismatch { expected: self.graph.nodes(), found: syndrome.len() });
        }
        let marks = syndrome.to_indices();
        let partners = self.pair(&marks, None)?;
        Ok(self.correction(&marks, &partners))
    }

    /// Total path length of the optimal matching for `syndrome`.
    pub fn matching_weight(&self, syndrome: &BitVector) -> Result<u32> {
        let marks = syndrome.to_indices();
        let partners = self.pair(&marks, None)?;
        Ok(partners
            .iter()
            .enumerate()
            .map(|(i, p)| match *p {
                Partner::Node(j) if j > i => self.paths.dist(marks[i], marks[j]),
                Partner::Boundary => self.boundary_distance(marks[i]),
                _ => 0,
            })
            .sum())
    }

    /// Matches the space-time marks with cost = graph distance + round difference
    /// and returns the spatial part of the paths.
    pub fn decode_spacetime(&self, st: &SpacetimeSyndrome) -> Result<BitVector> {
        let (rounds, nodes): (Vec<usize>, Vec<usize>) = st.marks().into_iter().unzip();
        let partners = self.pair(&nodes, Some(&rounds))?;
        Ok(self.correction(&nodes, &partners))
    }
}

/// Correction for a perfect syndrome of errors of type `error_type`.
pub fn mwpm_decode_2d(code: &CssCode, syndrome: &BitVector, error_type: Pauli) -> Result<BitVector> {
    MwpmDecoder::new(code, error_type)?.decode(syndrome)
}

/// Measured syndromes of rounds 1..=T followed by the perfect round T+1.
/// Round 0 is implicitly all-zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpacetimeSyndrome {
    rounds: Vec<BitVector>,
}

impl SpacetimeSyndrome {
    pub fn new(measured: Vec<BitVector>, final_syndrome: BitVector) -> Result<Self> {
        if measured.is_empty() {
            return Err(Error::InvalidInput("at least one noisy round is required".into()));
        }
        if measured.iter().any(|m| m.len() != final_syndrome.len()) {
            return Err(Error::InvalidInput("rounds have different lengths".into()));
        }
        let mut rounds = measured;
        rounds.push(final_syndrome);
        Ok(Self { rounds })
    }

    /// Number of noisy rounds T.
    pub fn noisy_rounds(&self) -> usize {
        self.rounds.len() - 1
    }

    /// Rounds 1..=T+1.
    pub fn rounds(&self) -> &[BitVector] {
        &self.rounds
    }

    /// (round, check) pairs whose value changed from the previous round.
    pub fn marks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut prev = BitVector::zeros(self.rounds[0].len());
        for (t, cur) in self.rounds.iter().enumerate() {
            out.extend(prev.xor(cur).ones().map(|v| (t + 1, v)));
            prev = cur.clone();
        }
        out
    }
}

/// Decodes repeated noisy measurements and classifies the result against the
/// accumulated physical error of type `error_type`.
pub fn mwpm_decode_noisy_2d(
    code: &CssCode,
    decoder: &MwpmDecoder,
    spacetime: &SpacetimeSyndrome,
    error: &BitVector,
    error_type: Pauli,
) -> Result<(BitVector, DecodeOutcome)> {
    let correction = decoder.decode_spacetime(spacetime)?;
    let residual = error.xor(&correction);
    let class = if code.is_logical_failure(&residual, error_type)? { Classification::LogicalFailure } else { Classification::Success };
    Ok((correction.clone(), DecodeOutcome { class, correction, sweeps: 0 }))
}
