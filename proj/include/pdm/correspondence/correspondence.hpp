#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdm/dynamics2d/dynamics2d.hpp"
#include "pdm/quantum/ordering.hpp"

namespace pdm::correspondence {

/// The two benchmark mass models whose classical fate is known in closed
/// form: the 1D rational mass blows up in finite time (never confined); the
/// 2D rational mass is confined to a radial interval.
enum class Model { Rational1D, Rational2D };

enum class Agreement { Consistent, Contradicts, ConditionallyConsistent };

std::string to_string(Model m);
std::string to_string(Agreement a);

/// One cell of the correspondence matrix.
struct CorrespondenceVerdict {
  quantum::OrderingScheme scheme;
  Model model;
  bool classically_confined;
  std::string classical_summary;
  quantum::QuantumClass quantum_class;
  std::optional<int> m_quantum;  ///< set for the 2D model
  Agreement agreement;
};

/// Applies the correspondence principle to one (scheme, model) pair:
/// unconfined classical motion agrees with a Free quantum problem and
/// contradicts BoundStates/Unphysical ones; confined classical motion
/// agrees with BoundStates and contradicts Free/Unphysical. The classical
/// side is evaluated analytically (blow-up / interval), never from a
/// simulation horizon. The 2D model requires m_quantum.
CorrespondenceVerdict judge(const quantum::OrderingScheme& scheme, Model model,
                            std::optional<int> m_quantum = std::nullopt);

/// Smallest |m| >= 1 for which the scheme is bound in 2D (the bracket is
/// monotone in m^2, so bound persists for all larger |m|). Empty when no
/// |m| <= 64 works.
std::optional<int> bound_threshold_2d(const quantum::OrderingScheme& scheme);

struct SchemeReportRow {
  quantum::OrderingScheme scheme;
  quantum::AmbiguityCoefficients coeffs;
  quantum::QuantumClass class_1d;
  std::vector<std::pair<int, quantum::QuantumClass>> class_2d_by_m;
  std::optional<Agreement> verdict_1d;
  std::optional<Agreement> verdict_2d;  ///< aggregated over the m range
  std::string verdict_2d_detail;
  std::string headline;
};

struct Report {
  std::vector<SchemeReportRow> rows;
  std::vector<int> m_values;
  std::vector<std::string> notes;
};

/// Correspondence matrix over schemes x models, with the 2D verdict
/// aggregated over m in [m_range.first, m_range.second]: Consistent when
/// every m agrees, Contradicts when none does, ConditionallyConsistent
/// (with the |m| threshold spelled out) when the verdict flips.
Report full_report(std::span<const quantum::OrderingScheme> schemes,
                   std::span<const Model> models, std::pair<int, int> m_range);

/// Default run: the five literature schemes, both models, m in [1, 3].
Report full_report();

/// Plain-text rendering of the report (one row per scheme plus notes).
std::string to_table(const Report& report);

}  // namespace pdm::correspondence
