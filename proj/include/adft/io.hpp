#pragma once

// Exact-string file formats. Vectors: a count line followed by one rational
// per line. Matrices: a "n,provenance" header row followed by the entry grid
// as comma-separated exact values (plain integer CSV in the slim case).
// Transform plans export as straight-line programs, one operation per line:
//
//   ADD dst a b      buf[dst] = buf[a] + buf[b]
//   SUB dst a b      buf[dst] = buf[a] - buf[b]
//   PERM o0 ... o_{n-1}   (final line) out[k] = buf[o_k]
//
// Inputs occupy buffer slots [0, n). When the trailing PERM is absent the
// outputs are the slots [n, 2n) in order, and n is inferred from the highest
// referenced slot. Everything is LF-terminated UTF-8.

#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adft/adft_matrix.hpp"
#include "adft/fadft.hpp"
#include "adft/rational.hpp"

namespace adft {

inline std::string serialize_vector(const std::vector<Rat>& values) {
    std::string out = std::to_string(values.size());
    out += '\n';
    for (const Rat& v : values) {
        out += rat_to_string(v);
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline std::vector<std::string> split_on(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline long parse_long(const std::string& s, const char* who) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(who) + ": bad integer '" + s + "'");
    }
}

}  // namespace detail

inline std::vector<Rat> parse_vector(const std::string& text) {
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw std::invalid_argument("vector file: missing count line");
    const long n = detail::parse_long(lines[0], "vector file");
    if (n < 0 || static_cast<std::size_t>(n) + 1 != lines.size())
        throw std::invalid_argument("vector file: count does not match line count");
    std::vector<Rat> values;
    values.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) values.push_back(rat_from_string(lines[static_cast<std::size_t>(i) + 1]));
    return values;
}

inline std::string provenance_name(Provenance p) {
    return p == Provenance::Oracle ? "oracle" : "slim";
}

inline std::string serialize_matrix(const AdftMatrix& m) {
    std::string out = std::to_string(m.size()) + "," + provenance_name(m.provenance()) + "\n";
    for (long k = 0; k < m.size(); ++k) {
        for (long l = 0; l < m.size(); ++l) {
            if (l) out += ',';
            out += rat_to_string(m.entry(k, l));
        }
        out += '\n';
    }
    return out;
}

inline AdftMatrix parse_matrix(const std::string& text) {
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw std::invalid_argument("matrix file: missing header");
    auto header = detail::split_on(lines[0], ',');
    if (header.size() != 2) throw std::invalid_argument("matrix file: header must be n,provenance");
    const long n = detail::parse_long(header[0], "matrix file");
    Provenance prov;
    if (header[1] == "oracle")
        prov = Provenance::Oracle;
    else if (header[1] == "slim")
        prov = Provenance::ClosedForm;
    else
        throw std::invalid_argument("matrix file: unknown provenance '" + header[1] + "'");
    if (n < 1 || lines.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("matrix file: row count mismatch");

    std::vector<std::vector<Rat>> grid;
    for (long k = 0; k < n; ++k) {
        auto cells = detail::split_on(lines[static_cast<std::size_t>(k) + 1], ',');
        if (cells.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("matrix file: column count mismatch");
        std::vector<Rat> row;
        for (const auto& cell : cells) row.push_back(rat_from_string(cell));
        grid.push_back(std::move(row));
    }
    std::vector<Rat> vals(static_cast<std::size_t>(n));
    for (long s = 0; s < n; ++s) vals[static_cast<std::size_t>(s)] = n == 1 ? grid[0][0] : grid[1][static_cast<std::size_t>(s)];
    AdftMatrix m(n, prov, std::move(vals));
    for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l)
            if (grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] != m.entry(k, l))
                throw std::invalid_argument("matrix file: entries are not of ADFT shape");
    return m;
}

inline std::string export_plan(const TransformPlan& plan) {
    std::string out;
    for (const auto& stage : plan.stages)
        for (const Butterfly& bf : stage) {
            out += "ADD " + std::to_string(bf.dst_hi) + " " + std::to_string(bf.src_a) + " " +
                   std::to_string(bf.src_b) + "\n";
            out += "SUB " + std::to_string(bf.dst_lo) + " " + std::to_string(bf.src_a) + " " +
                   std::to_string(bf.src_b) + "\n";
        }
    bool trivial_output = true;
    for (std::size_t k = 0; k < plan.output_slots.size(); ++k)
        if (plan.output_slots[k] != static_cast<std::int32_t>(plan.n + static_cast<long>(k)))
            trivial_output = false;
    if (!trivial_output) {
        out += "PERM";
        for (auto s : plan.output_slots) out += " " + std::to_string(s);
        out += '\n';
    }
    return out;
}

// Reference interpreter for exported programs.
inline std::vector<Rat> run_straight_line(const std::string& program, std::span<const Rat> input) {
    struct Op {
        bool add;
        long dst, a, b;
    };
    std::vector<Op> ops;
    std::vector<long> out_slots;
    long max_slot = -1;
    for (const std::string& line : detail::split_lines(program)) {
        if (line.empty()) continue;
        auto parts = detail::split_on(line, ' ');
        if (parts[0] == "ADD" || parts[0] == "SUB") {
            if (parts.size() != 4) throw std::invalid_argument("program: malformed op '" + line + "'");
            Op op{parts[0] == "ADD", detail::parse_long(parts[1], "program"),
                  detail::parse_long(parts[2], "program"), detail::parse_long(parts[3], "program")};
            max_slot = std::max({max_slot, op.dst, op.a, op.b});
            ops.push_back(op);
        } else if (parts[0] == "PERM") {
            for (std::size_t i = 1; i < parts.size(); ++i)
                out_slots.push_back(detail::parse_long(parts[i], "program"));
        } else {
            throw std::invalid_argument("program: unknown opcode in '" + line + "'");
        }
    }
    long n = out_slots.empty() ? (max_slot + 1) / 2 : static_cast<long>(out_slots.size());
    if (static_cast<long>(input.size()) != n)
        throw std::invalid_argument("program: input length mismatch");
    if (out_slots.empty())
        for (long k = 0; k < n; ++k) out_slots.push_back(n + k);
    std::vector<Rat> buf(static_cast<std::size_t>(std::max(max_slot + 1, 2 * n)), Rat(0));
    for (std::size_t i = 0; i < input.size(); ++i) buf[i] = input[i];
    for (const auto& op : ops) {
        const Rat a = buf[static_cast<std::size_t>(op.a)];
        const Rat b = buf[static_cast<std::size_t>(op.b)];
        if (op.add)
            buf[static_cast<std::size_t>(op.dst)] = a + b;
        else
            buf[static_cast<std::size_t>(op.dst)] = a - b;
    }
    std::vector<Rat> out;
    out.reserve(out_slots.size());
    for (long s : out_slots) out.push_back(buf[static_cast<std::size_t>(s)]);
    return out;
}

}  // namespace adft
