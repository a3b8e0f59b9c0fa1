#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "multigrover/simulate.hpp"

namespace multigrover {

// File formats. States and matrices are JSON objects
//   {"dim": N, "data": [[re, im], ...]}
// with data flat (length N) for states and row-major (length N*N) for
// matrices. Loaded states must be unit-norm within 1e-10 (they are then
// renormalized); loaded matrices must have unitarity residual <= 1e-10 * N.

StateVector load_state(const std::string& path);
void save_state(const std::string& path, const StateVector& state);

Matrix load_unitary(const std::string& path);
void save_unitary(const std::string& path, const Matrix& matrix);

/// Shortest decimal with 17 significant digits; round-trips exactly.
std::string format_double(double value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Trace artifacts. CSV columns are fixed; p_full and deviation cells are
// empty (CSV) or absent (JSON) when the full-space pass was not recorded.

std::string trace_csv(const IterationTrace& trace);
nlohmann::ordered_json trace_json(const IterationTrace& trace,
                                  nlohmann::ordered_json metadata);

/// One sweep point. Non-Proceed rows carry only the verdict; the numeric
/// fields are NaN / -1 and serialize as empty (CSV) or null (JSON).
struct SweepRow {
    std::uint64_t point; // swept axis value (dimension, target count, seed)
    Eigen::Index n;
    Eigen::Index l;
    PrecheckVerdict verdict;
    double a;
    long m_paper;
    long m_exact;
    double p_at_m_paper;
    double p_at_m_exact;
    double max_deviation;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows,
                                  nlohmann::ordered_json metadata);

} // namespace multigrover
