#pragma once

#include <string>
#include <vector>

#include "coringlab/model.hpp"
#include "coringlab/report.hpp"
#include "coringlab/rng.hpp"

namespace coringlab {

struct SuiteParams {
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    std::size_t max_dim = 3;
};

// Seeded random instances.  Comodules are sampled as invariant subspaces of
// cofree comodules (closed under both the dual-ring and base actions), so
// every finite sample is a genuine comodule; sampling retries until the
// dimension bound is met and throws after too many rejections.
Comodule random_comodule(const Coring& c, Rng& rng, std::size_t max_dim);
LeftComodule random_left_comodule(const Coring& c, Rng& rng, std::size_t max_dim);
Bimodule random_right_module(const Algebra& t, Rng& rng, std::size_t max_dim);
Matrix random_colinear_map(const Comodule& m, const Comodule& n, Rng& rng);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// One verdict line per object and axiom (the `validate` command).
void run_validation(const ModelFile& model, VerdictReport& report);

// One verdict line per randomized check of the named suite.
void run_suite(const ModelFile& model, const std::string& suite, const SuiteParams& params,
               VerdictReport& report);

// `compute <op> <args...>`: rat, cotensor, coind, dual.
void run_compute(const ModelFile& model, const std::vector<std::string>& expr,
                 VerdictReport& report);

} // namespace coringlab
