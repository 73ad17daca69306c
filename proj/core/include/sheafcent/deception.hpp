// deception.hpp — private opinions, relation types, information flow,
// public opinions, and the disclosure scalars they induce.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "sheafcent/graph.hpp"

namespace sheafcent {

enum class RelationType { Honest = 0, ProsocialLiar = 1, AntisocialLiar = 2 };

inline constexpr std::array<RelationType, 3> kAllRelations = {
    RelationType::Honest, RelationType::ProsocialLiar,
    RelationType::AntisocialLiar};

const char* to_string(RelationType r) noexcept;

// Accepts "honest", "prosocial", "antisocial"; throws ParseError otherwise.
RelationType relation_from_string(std::string_view token);

// Disclosure ratios divide by the speaker's opinion; opinions are kept away
// from zero by this floor.
inline constexpr double kMinOpinionMagnitude = 1e-3;

// One experiment state: who believes what, who lies how, and how honestly.
struct DeceptionAssignment {
  Eigen::VectorXd opinions;             // x_i in [-1,1], |x_i| >= floor
  std::vector<RelationType> relations;  // R_i
  double tau = 1.0;                     // honesty parameter in [0,1]
};

// Throws std::invalid_argument if sizes mismatch the graph, tau is outside
// [0,1], or any opinion leaves [-1,1]; throws SingularOpinionError if an
// opinion magnitude is below the floor.
void validate_assignment(const Graph& g, const DeceptionAssignment& a);

// Uniform on [-1,-floor] U [floor,1] by rejection; deterministic per seed.
Eigen::VectorXd sample_opinions(int n, std::uint64_t seed);

// w_ji: what user i tells a neighbor j.
//   honest      -> x_i
//   prosocial   -> tau*x_i + (1-tau)*x_j
//   antisocial  -> tau*x_i - (1-tau)*x_j
double info_flow(double x_i, double x_j, RelationType r_i, double tau);

// y_i = mean over neighbors j of info_flow(x_i, x_j, R_i, tau).
// Honest and isolated vertices return x_i exactly.
Eigen::VectorXd public_opinions(const Graph& g, const DeceptionAssignment& a);

// The 1x1 restriction map of vertex i into an edge shared with j:
//   honest      -> 1
//   prosocial   -> tau + (1-tau)*y_j/x_i
//   antisocial  -> tau - (1-tau)*y_j/x_i
double restriction_scalar(double x_i, double y_j, RelationType r_i, double tau);

// Ranks vertices by influence (larger = more influential, ties by index),
// splits the ranking into 10 contiguous deciles (remainders one-per-decile
// from the top), and randomly partitions each decile into the three relation
// types as evenly as possible. Requires n >= 3.
std::vector<RelationType> assign_relations_stratified(
    const Eigen::VectorXd& influence, std::uint64_t seed);

// One value per line in vertex order; '#' comments and blank lines skipped;
// exactly n values required. Values must lie in [-1,1] with magnitude at
// least the floor. Throws ParseError with line numbers.
Eigen::VectorXd load_opinions(std::istream& in, int n);

// One relation token per line in vertex order; same framing rules.
std::vector<RelationType> load_relations(std::istream& in, int n);

}  // namespace sheafcent
