#pragma once

// Line-oriented text formats.  '#' starts a comment anywhere on a line;
// blank lines are skipped.  Every parser reports the 1-based line of the
// first problem it finds.
//
//   plane graph:   planegraph 1 / n <count> / rot <v>: <w...> / outer <u> <v>
//   weights:       f <v> <value>
//   sequence:      del <v>  |  delsave <v> <w>
//   canvas:        plane-graph block, then P <v...> (cycle: repeat the first
//                  vertex at the end), A <v...>, B <v...>, then weight lines
//   assignment:    list <v>: <c...> / match <u> <v>: <cu>-<cv>, ...
//                  (edges without a match line default to the identity
//                  matching on shared colours)

#include <charconv>
#include <sstream>

#include "planedeg/canvas.hpp"
#include "planedeg/correspondence.hpp"

namespace planedeg {

struct parse_error : invalid_input {
    int line;
    parse_error(int line_, const std::string& msg)
        : invalid_input("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

namespace detail {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto pos = raw.find('#'); pos != std::string::npos)
            raw.erase(pos);
        std::istringstream ls(raw);
        Line l{number, {}};
        std::string tok;
        while (ls >> tok) l.tokens.push_back(tok);
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

inline long long parse_int(const Line& l, const std::string& tok) {
    long long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw parse_error(l.number, "expected an integer, got '" + tok + "'");
    return value;
}

// accepts "3:" as the id token of "rot 3: ..." style lines
inline int parse_id_colon(const Line& l, const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t.back() == ':') t.pop_back();
    long long v = parse_int(l, t);
    if (v < 0) throw parse_error(l.number, "vertex ids are nonnegative");
    return static_cast<int>(v);
}

}  // namespace detail

inline PlaneGraph parse_plane_graph(const std::string& text) {
    auto lines = detail::tokenize(text);
    std::size_t i = 0;
    auto need = [&](const char* what) -> const detail::Line& {
        if (i >= lines.size())
            throw parse_error(lines.empty() ? 1 : lines.back().number,
                              std::string("missing ") + what);
        return lines[i];
    };
    {
        const auto& l = need("'planegraph 1' header");
        if (l.tokens.size() != 2 || l.tokens[0] != "planegraph" ||
            l.tokens[1] != "1")
            throw parse_error(l.number, "expected 'planegraph 1' header");
        ++i;
    }
    int n = 0;
    {
        const auto& l = need("vertex count");
        if (l.tokens.size() != 2 || l.tokens[0] != "n")
            throw parse_error(l.number, "expected 'n <count>'");
        long long v = detail::parse_int(l, l.tokens[1]);
        if (v < 0 || v > 1'000'000)
            throw parse_error(l.number, "unreasonable vertex count");
        n = static_cast<int>(v);
        ++i;
    }
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    std::vector<char> have(static_cast<std::size_t>(n), 0);
    std::optional<Dart> outer;
    for (; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens[0] == "rot") {
            if (l.tokens.size() < 2)
                throw parse_error(l.number, "expected 'rot <v>: <w...>'");
            int v = detail::parse_id_colon(l, l.tokens[1]);
            if (v >= n)
                throw parse_error(l.number,
                                  "vertex " + std::to_string(v) +
                                      " out of range (n = " +
                                      std::to_string(n) + ")");
            if (have[v])
                throw parse_error(l.number, "duplicate rotation for vertex " +
                                                std::to_string(v));
            have[v] = 1;
            for (std::size_t t = 2; t < l.tokens.size(); ++t) {
                long long w = detail::parse_int(l, l.tokens[t]);
                if (w < 0 || w >= n)
                    throw parse_error(l.number, "neighbour out of range");
                rot[v].push_back(static_cast<Vertex>(w));
            }
        } else if (l.tokens[0] == "outer") {
            if (l.tokens.size() != 3)
                throw parse_error(l.number, "expected 'outer <u> <v>'");
            if (outer)
                throw parse_error(l.number, "duplicate outer line");
            long long u = detail::parse_int(l, l.tokens[1]);
            long long v = detail::parse_int(l, l.tokens[2]);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error(l.number, "outer dart out of range");
            outer = Dart{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        } else {
            break;  // start of an embedding block's trailer (canvas files)
        }
    }
    for (int v = 0; v < n; ++v)
        if (!have[v])
            throw parse_error(lines.empty() ? 1 : lines.back().number,
                              "no rotation for vertex " + std::to_string(v));
    try {
        return PlaneGraph(n, std::move(rot), outer);
    } catch (const invalid_input& e) {
        throw parse_error(lines.empty() ? 1 : lines.back().number, e.what());
    }
}

inline std::string serialize(const PlaneGraph& g) {
    require(g.num_vertices() == g.capacity(),
            "only graphs without deleted vertices serialize");
    std::ostringstream out;
    out << "planegraph 1\n";
    out << "n " << g.capacity() << "\n";
    for (Vertex v : g.vertices()) {
        out << "rot " << v << ":";
        for (Vertex w : g.rotation(v)) out << " " << w;
        out << "\n";
    }
    if (!g.outer_darts().empty()) {
        Dart d = g.outer_darts()[0];
        out << "outer " << d.from << " " << d.to << "\n";
    }
    return out.str();
}

inline WeightFn parse_weights(const std::string& text, const PlaneGraph& g) {
    auto lines = detail::tokenize(text);
    WeightFn f(static_cast<std::size_t>(g.capacity()), 0);
    std::vector<char> have(static_cast<std::size_t>(g.capacity()), 0);
    for (const auto& l : lines) {
        if (l.tokens[0] != "f" || l.tokens.size() != 3)
            throw parse_error(l.number, "expected 'f <v> <value>'");
        long long v = detail::parse_int(l, l.tokens[1]);
        if (v < 0 || v >= g.capacity() || !g.has_vertex(static_cast<int>(v)))
            throw parse_error(l.number, "unknown vertex in weight line");
        if (have[v])
            throw parse_error(l.number, "duplicate weight for vertex " +
                                            std::to_string(v));
        have[v] = 1;
        f[v] = static_cast<int>(detail::parse_int(l, l.tokens[2]));
    }
    for (Vertex v : g.vertices())
        if (!have[v])
            throw parse_error(lines.empty() ? 1 : lines.back().number,
                              "no weight for vertex " + std::to_string(v));
    return f;
}

inline std::string serialize_weights(const PlaneGraph& g, const WeightFn& f) {
    std::ostringstream out;
    for (Vertex v : g.vertices()) out << "f " << v << " " << f[v] << "\n";
    return out.str();
}

inline OpSeq parse_sequence(const std::string& text) {
    auto lines = detail::tokenize(text);
    OpSeq ops;
    for (const auto& l : lines) {
        if (l.tokens[0] == "del" && l.tokens.size() == 2) {
            ops.push_back(Op::del(
                static_cast<Vertex>(detail::parse_int(l, l.tokens[1]))));
        } else if (l.tokens[0] == "delsave" && l.tokens.size() == 3) {
            Vertex v = static_cast<Vertex>(detail::parse_int(l, l.tokens[1]));
            Vertex w = static_cast<Vertex>(detail::parse_int(l, l.tokens[2]));
            if (v == w)
                throw parse_error(l.number, "delsave needs two distinct "
                                            "vertices");
            ops.push_back(Op::delsave(v, w));
        } else {
            throw parse_error(l.number,
                              "expected 'del <v>' or 'delsave <v> <w>'");
        }
    }
    return ops;
}

inline std::string serialize_sequence(const OpSeq& ops) {
    std::ostringstream out;
    for (const Op& op : ops) out << to_string(op) << "\n";
    return out.str();
}

inline Canvas parse_canvas(const std::string& text) {
    // the plane-graph block ends at the first P/A/B/f line
    auto lines = detail::tokenize(text);
    std::ostringstream head, tail;
    bool in_tail = false;
    {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            std::string stripped = raw.substr(0, raw.find('#'));
            std::istringstream ls(stripped);
            std::string first;
            ls >> first;
            if (first == "P" || first == "A" || first == "B" || first == "f")
                in_tail = true;
            (in_tail ? tail : head) << raw << "\n";
        }
    }
    Canvas k;
    k.g = parse_plane_graph(head.str());
    k.f.assign(static_cast<std::size_t>(k.g.capacity()), 0);
    std::vector<char> have(static_cast<std::size_t>(k.g.capacity()), 0);
    bool saw_p = false;
    for (const auto& l : detail::tokenize(tail.str())) {
        auto vertex_list = [&](std::size_t from) {
            std::vector<Vertex> vs;
            for (std::size_t t = from; t < l.tokens.size(); ++t) {
                long long v = detail::parse_int(l, l.tokens[t]);
                if (v < 0 || v >= k.g.capacity())
                    throw parse_error(l.number, "vertex out of range");
                vs.push_back(static_cast<Vertex>(v));
            }
            return vs;
        };
        if (l.tokens[0] == "P") {
            if (saw_p) throw parse_error(l.number, "duplicate P line");
            saw_p = true;
            auto vs = vertex_list(1);
            if (vs.empty())
                throw parse_error(l.number, "P needs at least one vertex");
            if (vs.size() >= 2 && vs.front() == vs.back()) {
                vs.pop_back();
                k.p = PathSpec{vs, true};
            } else {
                k.p = PathSpec{vs, false};
            }
        } else if (l.tokens[0] == "A") {
            for (Vertex v : vertex_list(1)) k.a.insert(v);
        } else if (l.tokens[0] == "B") {
            for (Vertex v : vertex_list(1)) k.b.insert(v);
        } else if (l.tokens[0] == "f") {
            if (l.tokens.size() != 3)
                throw parse_error(l.number, "expected 'f <v> <value>'");
            long long v = detail::parse_int(l, l.tokens[1]);
            if (v < 0 || v >= k.g.capacity())
                throw parse_error(l.number, "unknown vertex in weight line");
            if (have[v])
                throw parse_error(l.number, "duplicate weight");
            have[v] = 1;
            k.f[v] = static_cast<int>(detail::parse_int(l, l.tokens[2]));
        } else {
            throw parse_error(l.number, "expected P, A, B or f line");
        }
    }
    if (!saw_p)
        throw parse_error(lines.empty() ? 1 : lines.back().number,
                          "canvas needs a P line");
    for (Vertex v : k.g.vertices())
        if (!have[v])
            throw parse_error(lines.empty() ? 1 : lines.back().number,
                              "no weight for vertex " + std::to_string(v));
    return k;
}

inline std::string serialize_canvas(const Canvas& k) {
    std::ostringstream out;
    out << serialize(k.g);
    out << "P";
    for (Vertex v : k.p.verts) out << " " << v;
    if (k.p.cycle) out << " " << k.p.verts.front();
    out << "\n";
    out << "A";
    for (Vertex v : k.a) out << " " << v;
    out << "\n";
    out << "B";
    for (Vertex v : k.b) out << " " << v;
    out << "\n";
    out << serialize_weights(k.g, k.f);
    return out.str();
}

inline CorrespondenceAssignment parse_assignment(const std::string& text,
                                                 const PlaneGraph& g) {
    CorrespondenceAssignment a;
    std::set<std::pair<Vertex, Vertex>> matched;
    for (const auto& l : detail::tokenize(text)) {
        if (l.tokens[0] == "list") {
            if (l.tokens.size() < 2)
                throw parse_error(l.number, "expected 'list <v>: <c...>'");
            int v = detail::parse_id_colon(l, l.tokens[1]);
            if (!g.has_vertex(v))
                throw parse_error(l.number, "unknown vertex");
            if (a.lists.count(v))
                throw parse_error(l.number, "duplicate list");
            std::vector<int> colors;
            for (std::size_t t = 2; t < l.tokens.size(); ++t)
                colors.push_back(
                    static_cast<int>(detail::parse_int(l, l.tokens[t])));
            std::sort(colors.begin(), colors.end());
            if (std::adjacent_find(colors.begin(), colors.end()) !=
                colors.end())
                throw parse_error(l.number, "repeated colour in list");
            a.lists[v] = std::move(colors);
        } else if (l.tokens[0] == "match") {
            if (l.tokens.size() < 3)
                throw parse_error(l.number,
                                  "expected 'match <u> <v>: <cu>-<cv>, ...'");
            int u = static_cast<int>(detail::parse_int(l, l.tokens[1]));
            int v = detail::parse_id_colon(l, l.tokens[2]);
            if (!g.has_edge(u, v))
                throw parse_error(l.number, "match line on a non-edge");
            bool flip = u > v;
            auto key = std::minmax(u, v);
            if (!matched.insert({key.first, key.second}).second)
                throw parse_error(l.number, "duplicate match line");
            std::vector<std::pair<int, int>> m;
            for (std::size_t t = 3; t < l.tokens.size(); ++t) {
                std::string tok = l.tokens[t];
                if (!tok.empty() && tok.back() == ',') tok.pop_back();
                if (tok.empty()) continue;
                auto dash = tok.find('-', 1);  // colours are nonnegative
                if (dash == std::string::npos)
                    throw parse_error(l.number,
                                      "expected '<cu>-<cv>' pair, got '" +
                                          tok + "'");
                int cu = static_cast<int>(
                    detail::parse_int(l, tok.substr(0, dash)));
                int cv = static_cast<int>(
                    detail::parse_int(l, tok.substr(dash + 1)));
                if (flip) std::swap(cu, cv);
                m.emplace_back(cu, cv);
            }
            a.matchings[{key.first, key.second}] = std::move(m);
        } else {
            throw parse_error(l.number, "expected 'list' or 'match' line");
        }
    }
    for (Vertex v : g.vertices())
        if (!a.lists.count(v))
            throw parse_error(1, "no list for vertex " + std::to_string(v));
    // default: identity matching on shared colours
    for (auto [u, v] : g.edges()) {
        if (matched.count({u, v})) continue;
        std::vector<std::pair<int, int>> m;
        const auto& lu = a.lists[u];
        const auto& lv = a.lists[v];
        for (int c : lu)
            if (std::binary_search(lv.begin(), lv.end(), c))
                m.emplace_back(c, c);
        a.matchings[{u, v}] = std::move(m);
    }
    return a;
}

inline std::string serialize_assignment(const PlaneGraph& g,
                                        const CorrespondenceAssignment& a) {
    std::ostringstream out;
    for (auto& [v, l] : a.lists) {
        out << "list " << v << ":";
        for (int c : l) out << " " << c;
        out << "\n";
    }
    for (auto [u, v] : g.edges()) {
        auto it = a.matchings.find({u, v});
        if (it == a.matchings.end()) continue;
        out << "match " << u << " " << v << ":";
        bool first = true;
        for (auto [cu, cv] : it->second) {
            out << (first ? " " : ", ") << cu << "-" << cv;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace planedeg
