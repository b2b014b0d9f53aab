#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hypertile/fractional.hpp"
#include "hypertile/hypergraph.hpp"

namespace hypertile {

// ".h3g": first non-comment line "n <N>", then one "i j k" line per edge with
// 0 <= i < j < k < N; '#' starts a comment; duplicate edge lines rejected.
struct H3gFile {
    Hypergraph3 graph;
    std::vector<Edge> file_order;  // edges in line order (for .fht indexing)
};

H3gFile read_h3g(std::istream& in);
H3gFile read_h3g_file(const std::string& path);
void write_h3g(std::ostream& out, const Hypergraph3& h);
void write_h3g_file(const std::string& path, const Hypergraph3& h);

// ".part": one line per part, "part <index>: v1 v2 ...", index 0 = V_0
// (may be empty), every vertex appearing exactly once.
VertexPartition read_part(std::istream& in, int n);
VertexPartition read_part_file(const std::string& path, int n);
void write_part(std::ostream& out, const VertexPartition& p);
void write_part_file(const std::string& path, const VertexPartition& p);

// ".fht": lines "v e_index num/den", edge indices in .h3g file order.
FractionalHomTiling read_fht(std::istream& in, const Hypergraph3& host,
                             const std::vector<Edge>& file_order);
FractionalHomTiling read_fht_file(const std::string& path, const Hypergraph3& host,
                                  const std::vector<Edge>& file_order);
void write_fht(std::ostream& out, const FractionalHomTiling& ft);

}  // namespace hypertile
