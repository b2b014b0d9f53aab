#include "hypertile/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypertile {

namespace {

// strip comment and surrounding whitespace; empty result = skip line
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

H3gFile read_h3g(std::istream& in) {
    std::string raw;
    long long n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            ls >> tag >> n;
            if (tag != "n" || ls.fail() || n < 0)
                throw std::runtime_error("h3g: expected header \"n <N>\" at line " +
                                         std::to_string(lineno));
            continue;
        }
        long long i, j, k;
        ls >> i >> j >> k;
        std::string rest;
        if (ls.fail() || (ls >> rest))
            throw std::runtime_error("h3g: bad edge line " + std::to_string(lineno));
        if (!(0 <= i && i < j && j < k && k < n))
            throw std::runtime_error("h3g: edge out of order or range at line " +
                                     std::to_string(lineno));
        edges.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)});
    }
    if (n < 0) throw std::runtime_error("h3g: missing header");
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::runtime_error("h3g: duplicate edge line");
    H3gFile out;
    out.file_order = edges;
    out.graph = Hypergraph3(static_cast<int>(n), std::move(edges));
    return out;
}

H3gFile read_h3g_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_h3g(in);
}

void write_h3g(std::ostream& out, const Hypergraph3& h) {
    out << "n " << h.n() << "\n";
    for (const auto& e : h.edges()) out << e[0] << " " << e[1] << " " << e[2] << "\n";
}

void write_h3g_file(const std::string& path, const Hypergraph3& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_h3g(out, h);
}

VertexPartition read_part(std::istream& in, int n) {
    std::string raw;
    std::vector<std::pair<int, std::vector<int>>> seen;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        int index;
        char colon;
        ls >> tag >> index >> colon;
        if (tag != "part" || ls.fail() || colon != ':')
            throw std::runtime_error("part: expected \"part <index>:\" at line " +
                                     std::to_string(lineno));
        std::vector<int> verts;
        int v;
        while (ls >> v) verts.push_back(v);
        seen.emplace_back(index, std::move(verts));
    }
    int max_index = 0;
    for (auto& [idx, verts] : seen) {
        if (idx < 0) throw std::runtime_error("part: negative index");
        max_index = std::max(max_index, idx);
    }
    std::vector<std::vector<int>> parts(max_index + 1);
    std::vector<char> present(max_index + 1, 0);
    for (auto& [idx, verts] : seen) {
        if (present[idx]) throw std::runtime_error("part: duplicate part index");
        present[idx] = 1;
        parts[idx] = std::move(verts);
    }
    for (int i = 1; i <= max_index; ++i)
        if (!present[i]) throw std::runtime_error("part: missing part index " + std::to_string(i));
    return VertexPartition(n, std::move(parts));
}

VertexPartition read_part_file(const std::string& path, int n) {
    auto in = open_or_throw(path);
    return read_part(in, n);
}

void write_part(std::ostream& out, const VertexPartition& p) {
    for (int i = 0; i <= p.r(); ++i) {
        out << "part " << i << ":";
        for (int v : p.part(i)) out << " " << v;
        out << "\n";
    }
}

void write_part_file(const std::string& path, const VertexPartition& p) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_part(out, p);
}

FractionalHomTiling read_fht(std::istream& in, const Hypergraph3& host,
                             const std::vector<Edge>& file_order) {
    FractionalHomTiling ft(host);
    const auto& canon = host.edges();
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long v, file_idx;
        std::string value;
        ls >> v >> file_idx >> value;
        if (ls.fail()) throw std::runtime_error("fht: bad line " + std::to_string(lineno));
        if (file_idx < 0 || file_idx >= static_cast<long long>(file_order.size()))
            throw std::runtime_error("fht: edge index out of range at line " +
                                     std::to_string(lineno));
        const Edge& e = file_order[file_idx];
        auto it = std::lower_bound(canon.begin(), canon.end(), e);
        ft.set(static_cast<int>(v), static_cast<int>(it - canon.begin()), Rational::parse(value));
    }
    return ft;
}

FractionalHomTiling read_fht_file(const std::string& path, const Hypergraph3& host,
                                  const std::vector<Edge>& file_order) {
    auto in = open_or_throw(path);
    return read_fht(in, host, file_order);
}

void write_fht(std::ostream& out, const FractionalHomTiling& ft) {
    for (const auto& [key, w] : ft.entries())
        out << key.first << " " << key.second << " " << w.str() << "\n";
}

}  // namespace hypertile
