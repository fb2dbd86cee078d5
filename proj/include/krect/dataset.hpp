#pragma once

// Dataset text format and seeded instance generators.
//
// Format: one point per line, two decimal numbers separated by whitespace
// (scientific notation accepted); blank lines and lines starting with '#'
// are ignored; ids are assigned in file order starting at 0. Duplicate
// (x, y) pairs are rejected with a diagnostic naming both line numbers.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "krect/geometry.hpp"

namespace krect {

// Throws std::runtime_error with a line-numbered message on malformed
// input, non-finite coordinates, or duplicate points.
PointSet read_points(std::istream& in);

// Adds the file name to any diagnostic. Throws std::runtime_error when the
// file cannot be opened.
PointSet read_points_file(const std::string& path);

// Full round-trip precision (17 significant digits), one point per line.
void write_points(std::ostream& out, const PointSet& ps);

void write_points_file(const std::string& path, const PointSet& ps);

// n independent uniform points in the unit square, deterministic in seed,
// duplicates resampled. ids 0..n-1.
PointSet gen_uniform(int n, std::uint64_t seed);

// Mixture of three Gaussian-like blobs with distinct centers and spreads,
// deterministic in seed, duplicates resampled. ids 0..n-1.
PointSet gen_clusters(int n, std::uint64_t seed);

}  // namespace krect
