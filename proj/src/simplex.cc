// Copyright 2026 The dynsyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dynsyn/simplex.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace dynsyn {
namespace {

constexpr double kHuge = 1e300;

struct Thunk {
  const Objective* f;
  std::vector<double> scratch;
};

double trampoline(const gsl_vector* v, void* params) {
  auto* thunk = static_cast<Thunk*>(params);
  for (size_t i = 0; i < thunk->scratch.size(); ++i) {
    thunk->scratch[i] = gsl_vector_get(v, i);
  }
  const double y = (*thunk->f)(thunk->scratch);
  return std::isfinite(y) ? y : kHuge;
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, std::vector<double> step, int max_iter,
                          double size_tol) {
  const size_t n = x0.size();
  if (n == 0 || step.size() != n) {
    throw std::invalid_argument("nelder_mead: start and step must have the same nonzero size");
  }
  gsl_set_error_handler_off();
  Thunk thunk{&f, std::vector<double>(n)};
  gsl_multimin_function fn{&trampoline, n, &thunk};

  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, VectorDeleter> s(gsl_vector_alloc(n));
  for (size_t i = 0; i < n; ++i) {
    gsl_vector_set(x.get(), i, x0[i]);
    gsl_vector_set(s.get(), i, step[i]);
  }
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), s.get());

  SimplexResult result;
  int status = GSL_CONTINUE;
  while (status == GSL_CONTINUE && result.iterations < max_iter) {
    ++result.iterations;
    if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) {
      break;
    }
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), size_tol);
  }
  result.converged = status == GSL_SUCCESS;
  result.x.resize(n);
  for (size_t i = 0; i < n; ++i) {
    result.x[i] = gsl_vector_get(m->x, i);
  }
  result.value = m->fval;
  return result;
}

SimplexResult nelder_mead_multistart(const Objective& f, const std::vector<std::vector<double>>& starts,
                                     std::vector<double> step, int max_iter, double size_tol) {
  if (starts.empty()) {
    throw std::invalid_argument("nelder_mead_multistart: no starting points");
  }
  SimplexResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    SimplexResult r = nelder_mead(f, start, step, max_iter, size_tol);
    if (r.value < best.value) {
      best = std::move(r);
    }
  }
  return best;
}

}  // namespace dynsyn
