#include "pdfade/validation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pdfade/errors.hpp"

namespace pdfade::validation {

namespace {

// minimal RFC-4180 reader, enough for the golden files this suite owns
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    fields.push_back(field);
    return fields;
}

}  // namespace

std::vector<GoldenRecord> load_golden_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open golden file '" + path + "'");
    std::vector<GoldenRecord> records;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {  // scenario,inputs,expected,tolerance,tol_kind,provenance
            header = false;
            continue;
        }
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 6)
            throw io_error("golden file '" + path + "': bad row '" + line + "'");
        GoldenRecord rec;
        rec.scenario = fields[0];
        rec.inputs = fields[1];
        rec.expected = std::stod(fields[2]);
        rec.tolerance = std::stod(fields[3]);
        rec.tol_kind = fields[4];
        rec.provenance = fields[5];
        if (rec.tol_kind != "abs" && rec.tol_kind != "rel")
            throw io_error("golden record '" + rec.scenario +
                           "': tol_kind must be abs or rel");
        records.push_back(rec);
    }
    return records;
}

MomentEstimate oracle_moments(double p, long samples, std::uint64_t seed) {
    if (!(p > 0)) throw domain_error("oracle_moments: P must be positive");
    if (samples < 100000)
        throw domain_error("oracle_moments: need at least 1e5 samples");
    rng::Stream stream(seed);
    return oracle_moments_stream(p, samples, stream);
}

double oracle_q_exhaustive(int n, int m_hat, double p_e) {
    if (n > 20) throw domain_error("oracle_q_exhaustive: n must be <= 20");
    if (n < 1 || m_hat < 1 || m_hat > n)
        throw domain_error("oracle_q_exhaustive: need 1 <= m_hat <= n <= 20");
    if (!(p_e >= 0.0 && p_e <= 1.0))
        throw domain_error("oracle_q_exhaustive: p_e must lie in [0, 1]");
    // every success/failure pattern, summed when successes < m_hat; the sum
    // runs over up to 2^20 terms, so it is compensated to keep the oracle
    // good to ~1 ulp
    double q = 0, comp = 0;
    const unsigned long patterns = 1ul << n;
    for (unsigned long mask = 0; mask < patterns; ++mask) {
        const int successes = __builtin_popcountl(mask);
        if (successes >= m_hat) continue;
        const double term = std::pow(1.0 - p_e, successes) *
                            std::pow(p_e, static_cast<double>(n - successes));
        const double y = term - comp;
        const double t = q + y;
        comp = (t - q) - y;
        q = t;
    }
    return q;
}

}  // namespace pdfade::validation
