#include "geom/incidence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geom {

namespace {

using Labels = std::vector<std::string>;
using PointSet = std::set<std::string>;

bool subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet intersect(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

bool contains(const PointSet& s, const std::string& p) { return s.count(p) > 0; }

// indices of lines/planes containing all given points
std::vector<size_t> carriers(const std::vector<PointSet>& sets, const Labels& pts) {
    std::vector<size_t> out;
    for (size_t i = 0; i < sets.size(); ++i) {
        bool all = true;
        for (const auto& p : pts)
            if (!contains(sets[i], p)) { all = false; break; }
        if (all) out.push_back(i);
    }
    return out;
}

bool collinear_in(const FiniteIncidenceModel& m, const Labels& pts) {
    return !carriers(m.lines, pts).empty();
}

}  // namespace

FiniteIncidenceModel canonical_four_point() {
    FiniteIncidenceModel m;
    m.points = {"1", "2", "3", "4"};
    m.lines = {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}};
    m.planes = {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}};
    return m;
}

void validate_model(const FiniteIncidenceModel& m, int max_points) {
    if (m.points.empty()) throw std::invalid_argument("model: no points declared");
    if (static_cast<int>(m.points.size()) > max_points)
        throw std::invalid_argument("model: point count exceeds the cap (" +
                                    std::to_string(max_points) + "); raise --max-points");
    PointSet universe(m.points.begin(), m.points.end());
    if (universe.size() != m.points.size())
        throw std::invalid_argument("model: duplicate point label");
    for (const auto& l : m.lines)
        if (!subset(l, universe)) throw std::invalid_argument("model: line not a subset of points");
    for (const auto& p : m.planes)
        if (!subset(p, universe)) throw std::invalid_argument("model: plane not a subset of points");
}

AxiomReport check_axiom(const FiniteIncidenceModel& m, const std::string& id, int max_points) {
    validate_model(m, max_points);
    AxiomReport rep;
    rep.id = id;
    auto fail = [&rep](std::vector<std::string> witness) {
        rep.pass = false;
        rep.witnesses.push_back(std::move(witness));
    };
    const auto& P = m.points;  // sorted: witnesses come out in label order

    if (id == "A1") {
        // each line contains at least two points
        for (size_t i = 0; i < m.lines.size(); ++i)
            if (m.lines[i].size() < 2)
                fail({"line#" + std::to_string(i)});
        rep.note = "each straight line contains at least two points";
    } else if (id == "A2") {
        // unique line through every pair of distinct points
        for (size_t i = 0; i < P.size(); ++i)
            for (size_t j = i + 1; j < P.size(); ++j) {
                auto c = carriers(m.lines, {P[i], P[j]});
                if (c.size() != 1) fail({P[i], P[j]});
            }
        rep.note = "a unique line through each pair of distinct points";
    } else if (id == "A3") {
        bool found = false;
        for (size_t i = 0; i < P.size() && !found; ++i)
            for (size_t j = i + 1; j < P.size() && !found; ++j)
                for (size_t k = j + 1; k < P.size() && !found; ++k)
                    if (!collinear_in(m, {P[i], P[j], P[k]})) found = true;
        if (!found) {
            fail({});
            rep.note = "no three non-collinear points exist";
        } else {
            rep.note = "three non-collinear points exist";
        }
    } else if (id == "A4") {
        // unique plane through every non-collinear triple
        for (size_t i = 0; i < P.size(); ++i)
            for (size_t j = i + 1; j < P.size(); ++j)
                for (size_t k = j + 1; k < P.size(); ++k) {
                    Labels t = {P[i], P[j], P[k]};
                    if (collinear_in(m, t)) continue;
                    auto c = carriers(m.planes, t);
                    if (c.size() != 1) fail(t);
                }
        rep.note = "a unique plane through each non-collinear triple";
    } else if (id == "A5") {
        for (size_t i = 0; i < m.planes.size(); ++i)
            if (m.planes[i].empty()) fail({"plane#" + std::to_string(i)});
        rep.note = "each plane contains at least one point";
    } else if (id == "A6") {
        // two shared points put the whole line into the plane
        for (size_t li = 0; li < m.lines.size(); ++li)
            for (size_t pi = 0; pi < m.planes.size(); ++pi) {
                auto common = intersect(m.lines[li], m.planes[pi]);
                if (common.size() >= 2 && !subset(m.lines[li], m.planes[pi]))
                    fail({"line#" + std::to_string(li), "plane#" + std::to_string(pi)});
            }
        rep.note = "a line with two points on a plane lies on it";
    } else if (id == "A7") {
        for (size_t i = 0; i < m.planes.size(); ++i)
            for (size_t j = i + 1; j < m.planes.size(); ++j) {
                if (m.planes[i] == m.planes[j]) continue;
                auto common = intersect(m.planes[i], m.planes[j]);
                if (common.size() == 1)
                    fail({"plane#" + std::to_string(i), "plane#" + std::to_string(j)});
            }
        rep.note = "intersecting planes share at least two points";
    } else if (id == "A8") {
        bool found = false;
        const size_t n = P.size();
        for (size_t i = 0; i < n && !found; ++i)
            for (size_t j = i + 1; j < n && !found; ++j)
                for (size_t k = j + 1; k < n && !found; ++k)
                    for (size_t l = k + 1; l < n && !found; ++l)
                        if (carriers(m.planes, {P[i], P[j], P[k], P[l]}).empty()) found = true;
        if (!found) {
            fail({});
            rep.note = "no four non-coplanar points exist";
        } else {
            rep.note = "four non-coplanar points exist";
        }
    } else {
        throw std::invalid_argument("unknown axiom id: " + id);
    }
    return rep;
}

std::vector<AxiomReport> check_all_axioms(const FiniteIncidenceModel& m, int max_points) {
    std::vector<AxiomReport> out;
    for (int i = 1; i <= 8; ++i) out.push_back(check_axiom(m, "A" + std::to_string(i), max_points));
    return out;
}

std::vector<AxiomReport> check_incidence_theorems(const FiniteIncidenceModel& m, int max_points) {
    for (const auto& rep : check_all_axioms(m, max_points))
        if (!rep.pass)
            throw std::invalid_argument(
                "check_incidence_theorems: model fails " + rep.id +
                "; the theorems are only claimed under the axioms");

    std::vector<AxiomReport> out;
    const auto& P = m.points;
    auto make = [&out](const std::string& id, const std::string& note) -> AxiomReport& {
        out.push_back(AxiomReport{id, true, {}, note});
        return out.back();
    };
    auto fail = [](AxiomReport& rep, std::vector<std::string> witness) {
        rep.pass = false;
        rep.witnesses.push_back(std::move(witness));
    };

    {
        auto& rep = make("Th1.1", "two distinct intersecting lines share exactly one point");
        for (size_t i = 0; i < m.lines.size(); ++i)
            for (size_t j = i + 1; j < m.lines.size(); ++j) {
                if (m.lines[i] == m.lines[j]) continue;
                if (intersect(m.lines[i], m.lines[j]).size() >= 2)
                    fail(rep, {"line#" + std::to_string(i), "line#" + std::to_string(j)});
            }
    }
    {
        auto& rep = make("Th1.2", "two distinct intersecting planes meet in a line");
        for (size_t i = 0; i < m.planes.size(); ++i)
            for (size_t j = i + 1; j < m.planes.size(); ++j) {
                if (m.planes[i] == m.planes[j]) continue;
                auto common = intersect(m.planes[i], m.planes[j]);
                if (common.empty()) continue;
                bool is_line = std::any_of(m.lines.begin(), m.lines.end(),
                                           [&](const PointSet& l) { return l == common; });
                if (!is_line)
                    fail(rep, {"plane#" + std::to_string(i), "plane#" + std::to_string(j)});
            }
    }
    {
        auto& rep = make("Th1.3", "a line and an off-line point span exactly one plane");
        for (size_t li = 0; li < m.lines.size(); ++li)
            for (const auto& p : P) {
                if (contains(m.lines[li], p)) continue;
                size_t count = 0;
                for (const auto& pl : m.planes)
                    if (subset(m.lines[li], pl) && contains(pl, p)) ++count;
                if (count != 1) fail(rep, {"line#" + std::to_string(li), p});
            }
    }
    {
        auto& rep = make("Th1.4", "a line not on a plane meets it in at most one point");
        for (size_t li = 0; li < m.lines.size(); ++li)
            for (size_t pi = 0; pi < m.planes.size(); ++pi) {
                if (subset(m.lines[li], m.planes[pi])) continue;
                if (intersect(m.lines[li], m.planes[pi]).size() >= 2)
                    fail(rep, {"line#" + std::to_string(li), "plane#" + std::to_string(pi)});
            }
    }
    {
        auto& rep = make("Th1.5", "two intersecting distinct lines lie on exactly one plane");
        for (size_t i = 0; i < m.lines.size(); ++i)
            for (size_t j = i + 1; j < m.lines.size(); ++j) {
                if (m.lines[i] == m.lines[j]) continue;
                if (intersect(m.lines[i], m.lines[j]).size() != 1) continue;
                size_t count = 0;
                for (const auto& pl : m.planes)
                    if (subset(m.lines[i], pl) && subset(m.lines[j], pl)) ++count;
                if (count != 1) fail(rep, {"line#" + std::to_string(i), "line#" + std::to_string(j)});
            }
    }
    {
        auto& rep = make("Th1.6", "each plane carries three non-collinear points");
        for (size_t pi = 0; pi < m.planes.size(); ++pi) {
            const auto& pl = m.planes[pi];
            Labels pts(pl.begin(), pl.end());
            bool found = false;
            for (size_t i = 0; i < pts.size() && !found; ++i)
                for (size_t j = i + 1; j < pts.size() && !found; ++j)
                    for (size_t k = j + 1; k < pts.size() && !found; ++k)
                        if (!collinear_in(m, {pts[i], pts[j], pts[k]})) found = true;
            if (!found) fail(rep, {"plane#" + std::to_string(pi)});
        }
    }
    return out;
}

FiniteIncidenceModel parse_incidence_model(const std::string& text) {
    FiniteIncidenceModel m;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        auto read_labels = [&ls]() {
            Labels out;
            std::string tok;
            while (ls >> tok) out.push_back(tok);
            return out;
        };
        if (head == "points:") {
            auto labels = read_labels();
            m.points.insert(m.points.end(), labels.begin(), labels.end());
        } else if (head == "line:") {
            auto labels = read_labels();
            m.lines.emplace_back(labels.begin(), labels.end());
        } else if (head == "plane:") {
            auto labels = read_labels();
            m.planes.emplace_back(labels.begin(), labels.end());
        } else {
            throw std::invalid_argument("model file line " + std::to_string(lineno) +
                                        ": unknown declaration '" + head + "'");
        }
    }
    std::sort(m.points.begin(), m.points.end());
    return m;
}

std::string format_incidence_model(const FiniteIncidenceModel& m) {
    std::ostringstream out;
    out << "points:";
    for (const auto& p : m.points) out << " " << p;
    out << "\n";
    for (const auto& l : m.lines) {
        out << "line:";
        for (const auto& p : l) out << " " << p;
        out << "\n";
    }
    for (const auto& p : m.planes) {
        out << "plane:";
        for (const auto& q : p) out << " " << q;
        out << "\n";
    }
    return out.str();
}

std::vector<std::pair<std::string, FiniteIncidenceModel>> mutations(
    const FiniteIncidenceModel& m) {
    std::vector<std::pair<std::string, FiniteIncidenceModel>> out;
    for (size_t i = 0; i < m.lines.size(); ++i) {
        FiniteIncidenceModel mm = m;
        mm.lines.erase(mm.lines.begin() + static_cast<long>(i));
        out.emplace_back("remove line#" + std::to_string(i), std::move(mm));
    }
    for (size_t i = 0; i < m.planes.size(); ++i) {
        for (const auto& p : m.planes[i]) {
            FiniteIncidenceModel mm = m;
            mm.planes[i].erase(p);
            out.emplace_back("drop " + p + " from plane#" + std::to_string(i), std::move(mm));
        }
    }
    for (size_t i = 0; i < m.lines.size(); ++i) {
        FiniteIncidenceModel mm = m;
        mm.lines.push_back(m.lines[i]);
        out.emplace_back("duplicate line#" + std::to_string(i), std::move(mm));
    }
    return out;
}

}  // namespace geom
