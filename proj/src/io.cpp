#include "multigrover/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace multigrover {

namespace {

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
}

/// Reads {"dim": N, "data": [[re, im], ...]} with data of the given length.
Vector parse_payload(const nlohmann::json& doc, const std::string& path,
                     bool square) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("data")) {
        throw Error(path + ": expected an object with dim and data");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 2) {
        throw DimensionError(path + ": dim must be an integer >= 2");
    }
    const Eigen::Index dim = doc["dim"].get<Eigen::Index>();
    const Eigen::Index expected = square ? dim * dim : dim;
    const auto& data = doc["data"];
    if (!data.is_array() ||
        static_cast<Eigen::Index>(data.size()) != expected) {
        throw Error(path + ": data must hold " + std::to_string(expected) +
                    " [re, im] pairs");
    }
    Vector values(expected);
    for (Eigen::Index k = 0; k < expected; ++k) {
        const auto& entry = data[static_cast<std::size_t>(k)];
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number()) {
            throw Error(path + ": data entries must be [re, im] pairs");
        }
        values[k] = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return values;
}

nlohmann::ordered_json dump_payload(const Vector& values, Eigen::Index dim) {
    nlohmann::ordered_json doc;
    doc["dim"] = dim;
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        data.push_back({values[k].real(), values[k].imag()});
    }
    doc["data"] = std::move(data);
    return doc;
}

void append_row(std::string& out, const std::initializer_list<std::string>& cells) {
    bool first = true;
    for (const std::string& cell : cells) {
        if (!first) {
            out += ',';
        }
        out += cell;
        first = false;
    }
    out += '\n';
}

} // namespace

StateVector load_state(const std::string& path) {
    const nlohmann::json doc = parse_file(path);
    Vector values = parse_payload(doc, path, false);
    const double norm = values.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw InvalidStateError(path + ": state norm " + std::to_string(norm) +
                                " is not 1 within 1e-10");
    }
    values /= norm;
    return StateVector(std::move(values));
}

void save_state(const std::string& path, const StateVector& state) {
    write_text_file(
        path, dump_payload(state.amplitudes(), state.dim()).dump(2) + "\n");
}

Matrix load_unitary(const std::string& path) {
    const nlohmann::json doc = parse_file(path);
    const Vector values = parse_payload(doc, path, true);
    const Eigen::Index dim = doc["dim"].get<Eigen::Index>();
    Matrix matrix(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            matrix(r, c) = values[r * dim + c];
        }
    }
    const double residual =
        (matrix.adjoint() * matrix - Matrix::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();
    if (residual > 1e-10 * static_cast<double>(dim)) {
        throw InvalidUnitaryError(path + ": unitarity residual " +
                                  std::to_string(residual) + " exceeds " +
                                  std::to_string(1e-10 * dim));
    }
    return matrix;
}

void save_unitary(const std::string& path, const Matrix& matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw DimensionError("matrix to save must be square");
    }
    const Eigen::Index dim = matrix.rows();
    Vector values(dim * dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            values[r * dim + c] = matrix(r, c);
        }
    }
    write_text_file(path, dump_payload(values, dim).dump(2) + "\n");
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << content;
    if (!out) {
        throw Error("failed writing " + path);
    }
}

std::string trace_csv(const IterationTrace& trace) {
    std::string out = "m,c1,c2,p_reduced,p_full,deviation\n";
    for (const TraceRow& row : trace.rows) {
        append_row(out,
                   {std::to_string(row.m), format_double(row.c1),
                    format_double(row.c2), format_double(row.p_reduced),
                    trace.has_full ? format_double(row.p_full) : std::string(),
                    trace.has_full ? format_double(row.deviation)
                                   : std::string()});
    }
    return out;
}

nlohmann::ordered_json trace_json(const IterationTrace& trace,
                                  nlohmann::ordered_json metadata) {
    nlohmann::ordered_json doc;
    doc["metadata"] = std::move(metadata);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const TraceRow& row : trace.rows) {
        nlohmann::ordered_json record;
        record["m"] = row.m;
        record["c1"] = row.c1;
        record["c2"] = row.c2;
        record["p_reduced"] = row.p_reduced;
        if (trace.has_full) {
            record["p_full"] = row.p_full;
            record["deviation"] = row.deviation;
        }
        rows.push_back(std::move(record));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "point,n,l,a,m_paper,m_exact,p_at_m_paper,p_at_m_exact,"
        "max_deviation,verdict\n";
    for (const SweepRow& row : rows) {
        const bool ok = row.verdict == PrecheckVerdict::Proceed;
        append_row(out, {std::to_string(row.point), std::to_string(row.n),
                         std::to_string(row.l),
                         ok ? format_double(row.a) : std::string(),
                         ok ? std::to_string(row.m_paper) : std::string(),
                         ok ? std::to_string(row.m_exact) : std::string(),
                         ok ? format_double(row.p_at_m_paper) : std::string(),
                         ok ? format_double(row.p_at_m_exact) : std::string(),
                         ok ? format_double(row.max_deviation) : std::string(),
                         to_string(row.verdict)});
    }
    return out;
}

nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows,
                                  nlohmann::ordered_json metadata) {
    nlohmann::ordered_json doc;
    doc["metadata"] = std::move(metadata);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
        const bool ok = row.verdict == PrecheckVerdict::Proceed;
        nlohmann::ordered_json record;
        record["point"] = row.point;
        record["n"] = row.n;
        record["l"] = row.l;
        record["a"] = ok ? nlohmann::ordered_json(row.a)
                         : nlohmann::ordered_json(nullptr);
        record["m_paper"] = ok ? nlohmann::ordered_json(row.m_paper)
                               : nlohmann::ordered_json(nullptr);
        record["m_exact"] = ok ? nlohmann::ordered_json(row.m_exact)
                               : nlohmann::ordered_json(nullptr);
        record["p_at_m_paper"] = ok ? nlohmann::ordered_json(row.p_at_m_paper)
                                    : nlohmann::ordered_json(nullptr);
        record["p_at_m_exact"] = ok ? nlohmann::ordered_json(row.p_at_m_exact)
                                    : nlohmann::ordered_json(nullptr);
        record["max_deviation"] =
            ok ? nlohmann::ordered_json(row.max_deviation)
               : nlohmann::ordered_json(nullptr);
        record["verdict"] = to_string(row.verdict);
        records.push_back(std::move(record));
    }
    doc["rows"] = std::move(records);
    return doc;
}

} // namespace multigrover
