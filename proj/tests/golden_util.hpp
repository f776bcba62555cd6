#pragma once

#include <cmath>
#include <map>
#include <string>

#include "doctest.h"
#include "pdfade/validation.hpp"

namespace testutil {

inline const std::map<std::string, pdfade::validation::GoldenRecord>& golden(
    const std::string& file) {
    static std::map<std::string, std::map<std::string, pdfade::validation::GoldenRecord>>
        cache;
    auto it = cache.find(file);
    if (it == cache.end()) {
        std::map<std::string, pdfade::validation::GoldenRecord> by_name;
        const auto records = pdfade::validation::load_golden_csv(
            std::string(PDFADE_GOLDEN_DIR) + "/" + file);
        for (const auto& rec : records) by_name[rec.scenario] = rec;
        it = cache.emplace(file, std::move(by_name)).first;
    }
    return it->second;
}

inline void check_golden(const std::string& file, const std::string& scenario,
                         double actual) {
    const auto& records = golden(file);
    const auto it = records.find(scenario);
    REQUIRE_MESSAGE(it != records.end(), "missing golden scenario ", scenario);
    const auto& rec = it->second;
    INFO("scenario ", scenario, ": actual ", actual, " expected ", rec.expected);
    if (rec.tol_kind == "rel") {
        CHECK(std::fabs(actual - rec.expected) <=
              rec.tolerance * std::fabs(rec.expected));
    } else {
        CHECK(std::fabs(actual - rec.expected) <= rec.tolerance);
    }
}

inline pdfade::fading::SystemParams ref_params(double t = 4000) {
    pdfade::fading::SystemParams p;
    p.m = 50;
    p.m_hat = 50;
    p.k = 20;
    p.l_f = 10;
    p.T = t;
    p.P = std::pow(10.0, 0.5);
    p.epsilon = 0.05;
    return p;
}

}  // namespace testutil
