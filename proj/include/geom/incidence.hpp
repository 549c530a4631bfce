#pragma once

#include <set>
#include <string>
#include <vector>

namespace geom {

// Finite incidence structure: labeled points with lines and planes as
// point subsets. Lines and planes are kept as lists so that duplicate
// declarations are representable (the A2/A4 uniqueness checks flag
// them); well-formedness only demands that every member set is a
// subset of the declared points.
struct FiniteIncidenceModel {
    std::vector<std::string> points;                 // sorted, unique
    std::vector<std::set<std::string>> lines;
    std::vector<std::set<std::string>> planes;
};

struct AxiomReport {
    std::string id;
    bool pass = true;
    std::vector<std::vector<std::string>> witnesses;  // counterexample tuples
    std::string note;
};

inline constexpr int kDefaultMaxModelPoints = 64;

// The canonical four-point model: points {1,2,3,4}, all six pairs as
// lines, all four triples as planes.
FiniteIncidenceModel canonical_four_point();

// throws std::invalid_argument on malformed models (member set not a
// subset of points, empty label list, over the size cap)
void validate_model(const FiniteIncidenceModel& m, int max_points = kDefaultMaxModelPoints);

// ids: "A1".."A8"
AxiomReport check_axiom(const FiniteIncidenceModel& m, const std::string& id,
                        int max_points = kDefaultMaxModelPoints);
std::vector<AxiomReport> check_all_axioms(const FiniteIncidenceModel& m,
                                          int max_points = kDefaultMaxModelPoints);

// the derived incidence theorems Th1.1-Th1.6; refuses models that fail A1-A8
std::vector<AxiomReport> check_incidence_theorems(const FiniteIncidenceModel& m,
                                                  int max_points = kDefaultMaxModelPoints);

// text format: `points: 1 2 3 4` / `line: 1 2` / `plane: 1 2 3`, one
// declaration per line, `#` comments
FiniteIncidenceModel parse_incidence_model(const std::string& text);
std::string format_incidence_model(const FiniteIncidenceModel& m);

// fixed single-edit corruptions for the mutation suite: every result
// differs from the input by one edit (a removed line, a point dropped
// from a plane, or a duplicated line)
std::vector<std::pair<std::string, FiniteIncidenceModel>> mutations(
    const FiniteIncidenceModel& m);

}  // namespace geom
