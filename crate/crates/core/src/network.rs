//! Word adjacency networks: one node per distinct lemma, an undirected edge
//! between lemmas that ever occur next to each other.

use std::collections::{BTreeSet, HashMap};
use std::io::{self, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::corpus::TokenStream;

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("stream '{0}' has fewer than 2 lemmas; no network can be built")]
    StreamTooShort(String),
}

/// An undirected, unweighted, loop-free graph with string node labels.
///
/// Symmetry and a zero diagonal hold by construction: edges are stored once
/// as sorted neighbor lists on both endpoints, and self-adjacency in the
/// source stream never becomes an edge.
#[derive(Debug, Clone)]
pub struct WordNetwork {
    labels: Vec<String>,
    adjacency: Vec<Vec<u32>>,
    m_edges: usize,
}

impl WordNetwork {
    /// Build the adjacency network of a lemma stream. Repeated adjacencies
    /// collapse to a single edge; node order is first occurrence.
    pub fn build(stream: &TokenStream) -> Result<Self, NetworkError> {
        if stream.lemmas.len() < 2 {
            return Err(NetworkError::StreamTooShort(stream.doc_id.clone()));
        }
        let mut index: HashMap<&str, u32> = HashMap::new();
        let mut labels = Vec::new();
        let ids: Vec<u32> = stream
            .lemmas
            .iter()
            .map(|lemma| {
                *index.entry(lemma.as_str()).or_insert_with(|| {
                    labels.push(lemma.clone());
                    (labels.len() - 1) as u32
                })
            })
            .collect();

        let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
        for pair in ids.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }

        let mut adjacency = vec![Vec::new(); labels.len()];
        for &(a, b) in &edges {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        Ok(WordNetwork {
            labels,
            adjacency,
            m_edges: edges.len(),
        })
    }

    /// Build a network directly from an edge list over `n` unlabeled nodes.
    /// Mostly useful in tests and benchmarks; duplicate edges and self-loops
    /// are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let labels = (0..n).map(|i| format!("n{i}")).collect();
        let set: BTreeSet<(u32, u32)> = edges
            .iter()
            .filter(|(a, b)| a != b && *a < n && *b < n)
            .map(|&(a, b)| ((a.min(b)) as u32, (a.max(b)) as u32))
            .collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &set {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        WordNetwork {
            labels,
            adjacency,
            m_edges: set.len(),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of undirected edges, the `M` of the assortativity formula.
    pub fn m_edges(&self) -> usize {
        self.m_edges
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&(b as u32)).is_ok()
    }

    /// Ordered undirected edge pairs (a < b).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(a, nbrs)| {
            nbrs.iter()
                .filter(move |&&b| (b as usize) > a)
                .map(move |&b| (a, b as usize))
        })
    }

    /// Write `label_a<TAB>label_b` lines, one per undirected edge.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (a, b) in self.edges() {
            writeln!(w, "{}\t{}", self.labels[a], self.labels[b])?;
        }
        Ok(())
    }
}

/// Uniform random permutation of the stream (Fisher-Yates under a seeded
/// ChaCha generator). Word frequencies are exactly preserved; only order is
/// destroyed, which is what the shuffled-baseline normalization needs.
pub fn shuffle_stream(stream: &TokenStream, seed: u64) -> TokenStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lemmas = stream.lemmas.clone();
    lemmas.shuffle(&mut rng);
    TokenStream::new(stream.doc_id.clone(), lemmas)
}
