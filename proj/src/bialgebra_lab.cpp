#include "ohl/bialgebra_lab.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

namespace ohl {

bool CheckReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

void CheckReport::append(const CheckReport& o) {
  results.insert(results.end(), o.results.begin(), o.results.end());
}

std::string CheckReport::text() const {
  std::string out;
  for (const auto& r : results) {
    out += r.pass ? "PASS  " : "FAIL  ";
    out += r.suite + "  " + r.axiom + "  degree<=" + std::to_string(r.max_degree);
    if (!r.note.empty()) out += "  (" + r.note + ")";
    out += '\n';
    if (r.witness) {
      out += "    tuple: " + r.witness->tuple + '\n';
      out += "    lhs:   " + r.witness->lhs + '\n';
      out += "    rhs:   " + r.witness->rhs + '\n';
    }
  }
  return out;
}

std::string CheckReport::json_lines() const {
  std::string out;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["axiom"] = r.axiom;
    j["degrees"] = "<=" + std::to_string(r.max_degree);
    j["status"] = r.pass ? "PASS" : "FAIL";
    if (r.witness) {
      j["witness"] = {{"tuple", r.witness->tuple}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    } else {
      j["witness"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    out += j.dump() + '\n';
  }
  return out;
}

std::optional<std::pair<std::size_t, Witness>> first_violation(
    std::size_t count, const std::function<std::optional<Witness>(std::size_t)>& test,
    const ExecPolicy& policy) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(policy.seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  std::optional<std::pair<std::size_t, Witness>> found;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      while (true) {
        std::size_t pos = next.fetch_add(1);
        if (pos >= count) return;
        std::size_t idx = order[pos];
        if (idx >= best.load()) continue;
        if (auto w = test(idx)) {
          std::lock_guard lock(mutex);
          if (!found || idx < found->first) {
            found = std::pair{idx, std::move(*w)};
            best.store(idx);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };

  const int jobs = std::max(1, policy.jobs);
  if (jobs == 1 || count < 2) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return found;
}

AxiomResult run_axiom(std::string suite, std::string axiom, int max_degree, std::size_t count,
                      const std::function<std::optional<Witness>(std::size_t)>& test,
                      const ExecPolicy& policy) {
  AxiomResult r;
  r.suite = std::move(suite);
  r.axiom = std::move(axiom);
  r.max_degree = max_degree;
  if (auto v = first_violation(count, test, policy)) {
    r.pass = false;
    r.witness = std::move(v->second);
  }
  return r;
}

AxiomResult freeness_report(std::string suite, const IntSeries& dims, const IntSeries& prim) {
  AxiomResult r;
  r.suite = std::move(suite);
  r.axiom = "freeness";
  r.max_degree = static_cast<int>(dims.dims.size());
  std::string expected;
  try {
    IntSeries g = free_generator_series(dims);
    expected = to_text(g);
    r.pass = g == prim;
  } catch (const Error& e) {
    expected = e.what();
    r.pass = false;
  }
  r.note = "dims " + to_text(dims) + " prim " + to_text(prim) + " generators " + expected;
  if (!r.pass) r.witness = Witness{to_text(dims), to_text(prim), expected};
  return r;
}

}  // namespace ohl
