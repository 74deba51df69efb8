#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glcurve/periods.hpp"

namespace glcurve::suites {

struct Item {
    std::string id;
    bool pass = false;
    std::string detail; // expected/actual or residual information
};

struct SuiteResult {
    std::string name;
    std::vector<Item> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    long passed() const {
        long n = 0;
        for (const auto& it : items) n += it.pass;
        return n;
    }
};

struct Options {
    long pmax = 0;                 // 0 = suite default
    std::vector<long> primes;      // overrides the suite's prime list when non-empty
    long precision = 50;           // decimal digits for period suites
    long jobs = 1;                 // parallelism for independent items
    std::uint64_t seed = 20140401; // randomized Weil sweep seed
    std::string expectations_path; // empty = default shipped file
};

// suites: greene, hd, yamamoto-example, count, sec6, sec71, sec72, lmfdb-table, periods, weil
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

std::string default_expectations_path();

} // namespace glcurve::suites
