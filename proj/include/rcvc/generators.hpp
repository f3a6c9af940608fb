#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "rcvc/graph.hpp"

// Instance generators. All use vertex ids 0..n-1 and are reproducible for a
// given std::mt19937_64 state (no std:: distributions are involved).
namespace rcvc::gen {

using Rng = std::mt19937_64;

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);  // center 0
Graph complete(std::size_t n);
Graph petersen();

/// Random 3-regular simple graph by the pairing model; pairings with loops or
/// parallel edges are rejected and redrawn. n must be even and >= 4.
Graph cubic(std::size_t n, Rng& rng);

/// Random edge proposals, rejected when they would create a parallel edge or
/// push an endpoint past `max_degree`; stops at `target_edges` accepted edges
/// or after 100·n + 100 proposals. Not uniform, but reproducible.
Graph bounded_degree(std::size_t n, std::size_t max_degree, std::size_t target_edges, Rng& rng);

/// bounded_degree with max degree 3 and 5n/4 target edges.
Graph maxdeg3(std::size_t n, Rng& rng);

/// Uniform labelled tree via a Prüfer sequence.
Graph tree(std::size_t n, Rng& rng);

/// Erdős–Rényi G(n, p).
Graph gnp(std::size_t n, double p, Rng& rng);

}  // namespace rcvc::gen
