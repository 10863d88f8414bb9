#include "pdm/correspondence/correspondence.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pdm::correspondence {

namespace {

// Benchmark parameters of the two models (the verdicts themselves are
// parameter-independent; these fix the numbers quoted in summaries).
constexpr double kB1d = 1.0, kM0 = 1.0;
constexpr double kC2d = 1.0, kR0 = 1.0, kRdot0 = 1.0, kThetadot0 = 1.0;

Agreement agree(bool confined, const quantum::QuantumClass& qc) {
  using Kind = quantum::QuantumClass::Kind;
  if (confined) return qc.kind == Kind::BoundStates ? Agreement::Consistent
                                                    : Agreement::Contradicts;
  return qc.kind == Kind::Free ? Agreement::Consistent : Agreement::Contradicts;
}

std::string classical_summary_1d() {
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "unconfined: finite-time blow-up at t = pi/(2 B xdot0) "
                "(benchmark t* = %.6f)",
                M_PI / (2.0 * kB1d));
  return buf;
}

std::string classical_summary_2d() {
  const auto bound = dynamics2d::rational_confinement_interval(
      kC2d, kM0, kR0, kRdot0, kThetadot0);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "confined: r in [%.6f, %.6f]", bound.r_lo,
                bound.r_hi);
  return buf;
}

}  // namespace

std::string to_string(Model m) {
  return m == Model::Rational1D ? "Rational1D" : "Rational2D";
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::Consistent: return "Consistent";
    case Agreement::Contradicts: return "Contradicts";
    case Agreement::ConditionallyConsistent: return "ConditionallyConsistent";
  }
  return "?";
}

CorrespondenceVerdict judge(const quantum::OrderingScheme& scheme, Model model,
                            std::optional<int> m_quantum) {
  if (model == Model::Rational1D) {
    const auto qc = quantum::classify_1d(scheme);
    return {scheme, model, false, classical_summary_1d(), qc, std::nullopt,
            agree(false, qc)};
  }
  if (!m_quantum.has_value()) {
    throw PreconditionError("judge: the 2D model needs a magnetic quantum number");
  }
  const auto qc = quantum::classify_2d(scheme, *m_quantum);
  return {scheme, model, true, classical_summary_2d(), qc, m_quantum,
          agree(true, qc)};
}

std::optional<int> bound_threshold_2d(const quantum::OrderingScheme& scheme) {
  for (int m = 1; m <= 64; ++m) {
    if (quantum::classify_2d(scheme, m).bound()) return m;
  }
  return std::nullopt;
}

Report full_report(std::span<const quantum::OrderingScheme> schemes,
                   std::span<const Model> models, std::pair<int, int> m_range) {
  if (schemes.empty()) throw PreconditionError("full_report: no schemes given");
  if (models.empty()) throw PreconditionError("full_report: no models given");
  bool want_1d = false, want_2d = false;
  for (const Model m : models) {
    want_1d |= (m == Model::Rational1D);
    want_2d |= (m == Model::Rational2D);
  }
  if (want_2d && m_range.second < m_range.first) {
    throw PreconditionError("full_report: empty m range for the 2D model");
  }

  Report report;
  for (int m = m_range.first; m <= m_range.second && want_2d; ++m) {
    report.m_values.push_back(m);
  }

  for (const auto& scheme : schemes) {
    SchemeReportRow row{scheme, quantum::coefficients(scheme),
                        quantum::classify_1d(scheme), {}, {}, {}, "", ""};
    if (want_1d) {
      row.verdict_1d = judge(scheme, Model::Rational1D).agreement;
    }
    if (want_2d) {
      bool all = true, none = true;
      for (const int m : report.m_values) {
        const auto v = judge(scheme, Model::Rational2D, m);
        row.class_2d_by_m.emplace_back(m, v.quantum_class);
        if (v.agreement == Agreement::Consistent) {
          none = false;
        } else {
          all = false;
        }
      }
      if (all) {
        row.verdict_2d = Agreement::Consistent;
      } else if (none) {
        row.verdict_2d = Agreement::Contradicts;
      } else {
        row.verdict_2d = Agreement::ConditionallyConsistent;
        if (const auto thr = bound_threshold_2d(scheme)) {
          row.verdict_2d_detail = "bound only for |m| >= " + std::to_string(*thr);
        }
      }
    }

    std::ostringstream head;
    if (row.verdict_1d) {
      head << "1D " << to_string(*row.verdict_1d);
    }
    if (row.verdict_2d) {
      if (row.verdict_1d) head << "; ";
      head << "2D " << to_string(*row.verdict_2d);
      if (!row.verdict_2d_detail.empty()) head << " (" << row.verdict_2d_detail << ")";
    }
    row.headline = head.str();
    report.rows.push_back(std::move(row));
  }

  report.notes = {
      "classical sides are analytic: the 1D rational mass escapes to infinity "
      "in finite time; the 2D rational mass is confined to a radial interval",
      "rule extension: confined classical motion paired with an Unphysical "
      "quantum class is reported as Contradicts",
      "the z-interval walls are the images of |x| -> infinity (1D) and "
      "r -> {0, infinity} (2D) under z = arctan(.); no finite position for "
      "the walls is asserted",
  };
  return report;
}

Report full_report() {
  const auto& schemes = quantum::builtin_schemes();
  const Model models[] = {Model::Rational1D, Model::Rational2D};
  return full_report(schemes, models, {1, 3});
}

std::string to_table(const Report& report) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-24s %-18s %-12s %-14s %-30s %s\n", "scheme",
                "(j,k,l)", "5a-4b", "1D", "2D by |m|", "verdict");
  os << buf;
  os << std::string(118, '-') << '\n';
  for (const auto& row : report.rows) {
    std::string jkl = "(" + row.scheme.j().to_fraction_string() + "," +
                      row.scheme.k().to_fraction_string() + "," +
                      row.scheme.l().to_fraction_string() + ")";
    std::string by_m;
    for (const auto& [m, qc] : row.class_2d_by_m) {
      if (!by_m.empty()) by_m += " ";
      by_m += std::to_string(m) + ":" + (qc.bound() ? "Bound" : "NotBound");
    }
    std::snprintf(buf, sizeof(buf), "%-24s %-18s %-12s %-14s %-30s %s\n",
                  row.scheme.name().c_str(), jkl.c_str(),
                  row.coeffs.well_strength_1d().to_fraction_string().c_str(),
                  quantum::to_string(row.class_1d.kind).c_str(), by_m.c_str(),
                  row.headline.c_str());
    os << buf;
  }
  for (const auto& note : report.notes) os << "note: " << note << '\n';
  return os.str();
}

}  // namespace pdm::correspondence
