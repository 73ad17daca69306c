#include "sheafcent/deception.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sheafcent/errors.hpp"
#include "sheafcent/rng.hpp"

namespace sheafcent {

const char* to_string(RelationType r) noexcept {
  switch (r) {
    case RelationType::Honest: return "honest";
    case RelationType::ProsocialLiar: return "prosocial";
    case RelationType::AntisocialLiar: return "antisocial";
  }
  return "unknown";
}

RelationType relation_from_string(std::string_view token) {
  if (token == "honest") return RelationType::Honest;
  if (token == "prosocial") return RelationType::ProsocialLiar;
  if (token == "antisocial") return RelationType::AntisocialLiar;
  throw ParseError("unknown relation type: '" + std::string(token) +
                   "' (expected honest|prosocial|antisocial)");
}

void validate_assignment(const Graph& g, const DeceptionAssignment& a) {
  const int n = g.vertex_count();
  if (a.opinions.size() != n)
    throw std::invalid_argument("opinion vector length does not match graph");
  if (static_cast<int>(a.relations.size()) != n)
    throw std::invalid_argument("relation vector length does not match graph");
  if (!(a.tau >= 0.0 && a.tau <= 1.0))
    throw std::invalid_argument("honesty parameter must lie in [0, 1]");
  for (int i = 0; i < n; ++i) {
    const double x = a.opinions[i];
    if (!(x >= -1.0 && x <= 1.0))
      throw std::invalid_argument("opinion " + std::to_string(i) +
                                  " outside [-1, 1]");
    if (std::abs(x) < kMinOpinionMagnitude)
      throw SingularOpinionError("opinion " + std::to_string(i) +
                                 " has magnitude below " +
                                 std::to_string(kMinOpinionMagnitude));
  }
}

Eigen::VectorXd sample_opinions(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  RandomEngine eng(seed);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    double value;
    do {
      value = uniform_real(eng, -1.0, 1.0);
    } while (std::abs(value) < kMinOpinionMagnitude);
    x[i] = value;
  }
  return x;
}

double info_flow(double x_i, double x_j, RelationType r_i, double tau) {
  switch (r_i) {
    case RelationType::Honest: return x_i;
    case RelationType::ProsocialLiar: return tau * x_i + (1.0 - tau) * x_j;
    case RelationType::AntisocialLiar: return tau * x_i - (1.0 - tau) * x_j;
  }
  throw std::invalid_argument("invalid relation type");
}

Eigen::VectorXd public_opinions(const Graph& g, const DeceptionAssignment& a) {
  validate_assignment(g, a);
  const int n = g.vertex_count();
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const auto nbrs = g.neighbors(i);
    // Honest speech is neighbor-independent and isolated vertices disclose
    // nothing; both cases reduce to x_i exactly.
    if (a.relations[static_cast<std::size_t>(i)] == RelationType::Honest ||
        nbrs.empty()) {
      y[i] = a.opinions[i];
      continue;
    }
    double sum = 0.0;
    for (const auto& nb : nbrs)
      sum += info_flow(a.opinions[i], a.opinions[nb.vertex],
                       a.relations[static_cast<std::size_t>(i)], a.tau);
    y[i] = sum / static_cast<double>(nbrs.size());
  }
  return y;
}

double restriction_scalar(double x_i, double y_j, RelationType r_i, double tau) {
  if (std::abs(x_i) < kMinOpinionMagnitude)
    throw SingularOpinionError("cannot form disclosure ratio: |x| = " +
                               std::to_string(std::abs(x_i)) + " below " +
                               std::to_string(kMinOpinionMagnitude));
  switch (r_i) {
    case RelationType::Honest: return 1.0;
    case RelationType::ProsocialLiar: return tau + (1.0 - tau) * (y_j / x_i);
    case RelationType::AntisocialLiar: return tau - (1.0 - tau) * (y_j / x_i);
  }
  throw std::invalid_argument("invalid relation type");
}

std::vector<RelationType> assign_relations_stratified(
    const Eigen::VectorXd& influence, std::uint64_t seed) {
  const int n = static_cast<int>(influence.size());
  if (n < 3)
    throw std::invalid_argument(
        "stratified assignment requires at least 3 vertices");
  if (!influence.allFinite())
    throw std::invalid_argument("influence scores must be finite");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (influence[a] != influence[b]) return influence[a] > influence[b];
    return a < b;
  });

  RandomEngine eng(seed);
  std::vector<RelationType> relations(static_cast<std::size_t>(n));
  const int base_size = n / 10;
  const int oversized = n % 10;
  int cursor = 0;
  for (int d = 0; d < 10; ++d) {
    const int size = base_size + (d < oversized ? 1 : 0);
    if (size == 0) continue;
    // Even split of the decile; the size % 3 leftover slots go to randomly
    // chosen distinct types.
    std::vector<RelationType> pool;
    pool.reserve(static_cast<std::size_t>(size));
    for (RelationType r : kAllRelations)
      pool.insert(pool.end(), static_cast<std::size_t>(size / 3), r);
    std::vector<RelationType> extras(kAllRelations.begin(), kAllRelations.end());
    fisher_yates_shuffle(extras, eng);
    pool.insert(pool.end(), extras.begin(), extras.begin() + size % 3);
    fisher_yates_shuffle(pool, eng);
    for (int k = 0; k < size; ++k)
      relations[static_cast<std::size_t>(
          order[static_cast<std::size_t>(cursor + k)])] =
          pool[static_cast<std::size_t>(k)];
    cursor += size;
  }
  return relations;
}

namespace {

// Shared framing for the one-value-per-line formats.
std::vector<std::string> read_value_lines(std::istream& in, int n,
                                          const char* what,
                                          std::vector<long>* line_numbers) {
  std::vector<std::string> values;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string token, extra;
    if (!(tokens >> token)) continue;
    if (tokens >> extra)
      throw ParseError(std::string("expected a single ") + what, line_no);
    values.push_back(token);
    line_numbers->push_back(line_no);
  }
  if (static_cast<int>(values.size()) != n)
    throw ParseError(std::string("expected ") + std::to_string(n) + " " + what +
                     " values, found " + std::to_string(values.size()));
  return values;
}

}  // namespace

Eigen::VectorXd load_opinions(std::istream& in, int n) {
  std::vector<long> lines;
  const auto tokens = read_value_lines(in, n, "opinion", &lines);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    const std::string& token = tokens[static_cast<std::size_t>(i)];
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value))
      throw ParseError("invalid opinion value '" + token + "'",
                       lines[static_cast<std::size_t>(i)]);
    if (!(value >= -1.0 && value <= 1.0))
      throw ParseError("opinion outside [-1, 1]", lines[static_cast<std::size_t>(i)]);
    if (std::abs(value) < kMinOpinionMagnitude)
      throw ParseError("opinion magnitude below 0.001",
                       lines[static_cast<std::size_t>(i)]);
    x[i] = value;
  }
  return x;
}

std::vector<RelationType> load_relations(std::istream& in, int n) {
  std::vector<long> lines;
  const auto tokens = read_value_lines(in, n, "relation", &lines);
  std::vector<RelationType> relations;
  relations.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    try {
      relations.push_back(relation_from_string(tokens[static_cast<std::size_t>(i)]));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lines[static_cast<std::size_t>(i)]);
    }
  }
  return relations;
}

}  // namespace sheafcent
