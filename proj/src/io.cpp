#include "lcc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lcc/error.hpp"

namespace lcc {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < -2147483647LL || v > 2147483647LL) throw MalformedInput(std::string(what) + " out of range");
    return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

Json sorted_list(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return Json(v);
}

} // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) throw MalformedInput("negative vertex count");
    std::vector<Edge> es;
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw MalformedInput("edges must be an array");
    for (const auto& e : edges) {
        auto p = int_list(e, "edge");
        if (p.size() != 2) throw MalformedInput("an edge needs exactly two endpoints");
        es.emplace_back(p[0], p[1]);
    }
    return Graph(n, es);
}

Json to_json(const CliqueCovering& c) {
    std::vector<Clique> cl = canonical(c).cliques;
    std::sort(cl.begin(), cl.end());
    return Json{{"cliques", cl}};
}

CliqueCovering covering_from_json(const Json& j) {
    CliqueCovering c;
    const Json& cl = field(j, "cliques");
    if (!cl.is_array()) throw MalformedInput("cliques must be an array");
    for (const auto& k : cl) c.cliques.push_back(int_list(k, "clique"));
    return canonical(std::move(c));
}

Json to_json(const IntersectionRepresentation& r) {
    Json sets = Json::array();
    for (const auto& s : r.sets) sets.push_back(sorted_list(s));
    return Json{{"labels", r.labels}, {"sets", sets}};
}

IntersectionRepresentation representation_from_json(const Json& j) {
    IntersectionRepresentation r;
    r.labels = as_int(field(j, "labels"), "labels");
    const Json& sets = field(j, "sets");
    if (!sets.is_array()) throw MalformedInput("sets must be an array");
    for (const auto& s : sets) {
        r.sets.push_back(int_list(s, "label set"));
        for (int l : r.sets.back())
            if (l < 0 || l >= r.labels) throw MalformedInput("label " + std::to_string(l) + " outside 0..labels-1");
    }
    return r;
}

Json to_json(const Rational& q) {
    const long long d = q.denominator();
    const bool dyadic = (d & (d - 1)) == 0;
    const bool exact = std::llabs(q.numerator()) < (1LL << 53);
    if (d == 1) return Json(q.numerator());
    if (dyadic && exact) return Json(static_cast<double>(q.numerator()) / static_cast<double>(d));
    return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long long>());
        if (j.is_number_float()) {
            const double x = j.get<double>();
            if (!std::isfinite(x)) throw MalformedInput("non-finite coordinate");
            int e = 0;
            double m = std::frexp(x, &e); // x = m * 2^e, |m| in [0.5, 1)
            long long num = static_cast<long long>(std::ldexp(m, 53));
            e -= 53;
            while (e < 0 && num % 2 == 0 && num != 0) {
                num /= 2;
                ++e;
            }
            if (num == 0) return Rational(0);
            if (e >= 0) {
                if (e > 10) throw MalformedInput("coordinate too large");
                return Rational(num * (1LL << e));
            }
            if (e < -60) throw MalformedInput("coordinate needs more than 60 binary digits");
            return Rational(num, 1LL << (-e));
        }
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            const auto slash = s.find('/');
            std::size_t used = 0;
            const long long p = std::stoll(s.substr(0, slash), &used);
            if (used != (slash == std::string::npos ? s.size() : slash)) throw MalformedInput("bad rational \"" + s + "\"");
            if (slash == std::string::npos) return Rational(p);
            const std::string qs = s.substr(slash + 1);
            const long long q = std::stoll(qs, &used);
            if (used != qs.size() || q == 0) throw MalformedInput("bad rational \"" + s + "\"");
            return Rational(p, q);
        }
    } catch (const std::logic_error&) {
        throw MalformedInput("bad rational " + j.dump());
    }
    throw MalformedInput("coordinate must be a number or a \"p/q\" string");
}

Json to_json(const IntervalModel& m) {
    Json pts = Json::array(), ivs = Json::array();
    for (const auto& p : m.points) pts.push_back(to_json(p));
    for (const auto& iv : m.intervals) ivs.push_back({to_json(iv.lo), to_json(iv.hi)});
    return Json{{"points", pts}, {"intervals", ivs}};
}

IntervalModel interval_model_from_json(const Json& j) {
    IntervalModel m;
    const Json& pts = field(j, "points");
    const Json& ivs = field(j, "intervals");
    if (!pts.is_array() || !ivs.is_array()) throw MalformedInput("points and intervals must be arrays");
    for (const auto& p : pts) m.points.push_back(rational_from_json(p));
    for (const auto& iv : ivs) {
        if (!iv.is_array() || iv.size() != 2) throw MalformedInput("an interval is a [lo, hi] pair");
        m.intervals.push_back({rational_from_json(iv[0]), rational_from_json(iv[1])});
    }
    validate(m);
    return m;
}

Json to_json(const RectCovering& c) {
    Json rects = Json::array();
    for (const auto& r : c.rects) {
        if (r.contiguous())
            rects.push_back({{"rows", {r.rows.front(), r.rows.back()}}, {"cols", {r.cols.front(), r.cols.back()}}});
        else
            rects.push_back({{"row_set", sorted_list(r.rows)}, {"col_set", sorted_list(r.cols)}});
    }
    return Json{{"n", c.n}, {"rects", rects}};
}

RectCovering rect_covering_from_json(const Json& j) {
    RectCovering c;
    c.n = as_int(field(j, "n"), "n");
    if (c.n < 0) throw MalformedInput("negative matrix order");
    const Json& rects = field(j, "rects");
    if (!rects.is_array()) throw MalformedInput("rects must be an array");
    for (const auto& r : rects) {
        Rectangle rc;
        if (r.is_object() && r.contains("rows")) {
            auto rows = int_list(field(r, "rows"), "rows");
            auto cols = int_list(field(r, "cols"), "cols");
            if (rows.size() != 2 || cols.size() != 2 || rows[0] > rows[1] || cols[0] > cols[1])
                throw MalformedInput("rows/cols must be [lo, hi] with lo <= hi");
            if (static_cast<long long>(rows[1]) - rows[0] > c.n || static_cast<long long>(cols[1]) - cols[0] > c.n)
                throw MalformedInput("rectangle range exceeds the matrix");
            rc = Rectangle::range(rows[0], rows[1], cols[0], cols[1]);
        } else {
            rc.rows = int_list(field(r, "row_set"), "row_set");
            rc.cols = int_list(field(r, "col_set"), "col_set");
            std::sort(rc.rows.begin(), rc.rows.end());
            std::sort(rc.cols.begin(), rc.cols.end());
        }
        c.rects.push_back(std::move(rc));
    }
    return c;
}

Json to_json(const SetPairFamily& f) {
    Json pairs = Json::array();
    for (const auto& [a, b] : f.pairs) pairs.push_back({{"A", sorted_list(a)}, {"B", sorted_list(b)}});
    return Json{{"r", f.r}, {"s", f.s}, {"pairs", pairs}};
}

SetPairFamily family_from_json(const Json& j) {
    SetPairFamily f;
    f.r = as_int(field(j, "r"), "r");
    f.s = as_int(field(j, "s"), "s");
    if (f.r < 1 || f.s < 1) throw MalformedInput("r and s must be >= 1");
    const Json& pairs = field(j, "pairs");
    if (!pairs.is_array()) throw MalformedInput("pairs must be an array");
    for (const auto& p : pairs) f.pairs.emplace_back(int_list(field(p, "A"), "A"), int_list(field(p, "B"), "B"));
    return f;
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

Json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw MalformedInput("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::exception& e) {
        throw MalformedInput(p.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw MalformedInput("cannot write " + p.string());
    out << text;
    if (!out) throw MalformedInput("write failed for " + p.string());
}

} // namespace lcc
