#include "xxring/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "xxring/concurrence.hpp"
#include "xxring/parallel.hpp"
#include "xxring/teleport.hpp"

namespace xxring {

std::optional<Quantity> quantity_from_name(std::string_view name) {
  if (name == "concurrence") return Quantity::Concurrence;
  if (name == "avg_fidelity") return Quantity::AvgFidelity;
  if (name == "advantage") return Quantity::Advantage;
  if (name == "probabilities") return Quantity::Probabilities;
  return std::nullopt;
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Concurrence: return "concurrence";
    case Quantity::AvgFidelity: return "avg_fidelity";
    case Quantity::Advantage: return "advantage";
    case Quantity::Probabilities: return "probabilities";
  }
  return "?";
}

double SweepRange::at(int i) const {
  if (count == 1) return start;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepSpec::validate() const {
  if (!std::isfinite(J)) throw std::invalid_argument("sweep: J must be finite");
  if (quantities.empty()) throw std::invalid_argument("sweep: quantity list is empty");
  for (const SweepRange* r : {&B, &T}) {
    if (r->count < 1) throw std::invalid_argument("sweep: range count must be >= 1");
    if (!(r->start <= r->stop)) throw std::invalid_argument("sweep: range start must be <= stop");
    if (!std::isfinite(r->start) || !std::isfinite(r->stop)) {
      throw std::invalid_argument("sweep: range bounds must be finite");
    }
  }
  if (!(T.start > 0.0)) throw std::invalid_argument("sweep: temperatures must be positive");
  if (units_of_J && J == 0.0) {
    throw std::invalid_argument("sweep: units-of-J output requires J != 0");
  }
  if (!(theta >= 0.0 && theta <= 3.1415926535897932)) {
    throw std::invalid_argument("sweep: theta must lie in [0, pi]");
  }
}

SweepTable run_sweep(const SweepSpec& spec, bool parallel) {
  spec.validate();
  const double scale = spec.units_of_J ? std::abs(spec.J) : 1.0;

  SweepTable table;
  table.columns = {"J", "B", "T"};
  for (Quantity q : spec.quantities) {
    if (q == Quantity::Probabilities) {
      table.columns.insert(table.columns.end(), {"p1", "p2", "p3", "p4"});
    } else {
      table.columns.emplace_back(quantity_name(q));
    }
  }

  const std::size_t n_rows = static_cast<std::size_t>(spec.B.count) * spec.T.count;
  table.rows.assign(n_rows, {});

  for_each_index(n_rows, parallel, [&](std::size_t r) {
    const int bi = static_cast<int>(r) / spec.T.count;
    const int ti = static_cast<int>(r) % spec.T.count;
    const double b_axis = spec.B.at(bi);
    const double t_axis = spec.T.at(ti);
    const RingParams p{spec.J, b_axis * scale, 1.0 / (t_axis * scale)};

    std::vector<double> row = {spec.J, b_axis, t_axis};
    for (Quantity q : spec.quantities) {
      switch (q) {
        case Quantity::Concurrence:
          row.push_back(thermal_concurrence(p));
          break;
        case Quantity::AvgFidelity:
          row.push_back(average_fidelity_closed(p));
          break;
        case Quantity::Advantage:
          row.push_back(quantum_advantage(p) ? 1.0 : 0.0);
          break;
        case Quantity::Probabilities: {
          const auto probs = outcome_probabilities_closed(p, spec.theta);
          row.insert(row.end(), probs.begin(), probs.end());
          break;
        }
      }
    }
    table.rows[r] = std::move(row);
  });
  return table;
}

}  // namespace xxring
