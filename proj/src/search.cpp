#include "expdio/search.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "expdio/report_json.hpp"

namespace expdio {

void SearchConfig::validate() const {
  if (a_max < 2 || b_max < 2) {
    throw DomainError("search: a_max and b_max must be >= 2");
  }
  const BigInt largest = std::max(a_max, b_max);
  if (power_cap < largest * largest) {
    throw DomainError("search: power cap must be at least max(a_max, b_max)^2");
  }
  if (checkpoint_every == 0) throw DomainError("search: checkpoint_every must be >= 1");
  if (resume && !checkpoint_path) {
    throw DomainError("search: resume requires a checkpoint path");
  }
}

std::vector<std::pair<unsigned long, unsigned long>> search_pairs(unsigned long a_max,
                                                                  unsigned long b_max) {
  std::vector<std::pair<unsigned long, unsigned long>> pairs;
  for (unsigned long a = 2; a <= a_max; ++a) {
    for (unsigned long b = a + 1; b <= b_max; ++b) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

namespace {

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  return out;
}

std::vector<BigInt> powers_up_to(unsigned long base, const BigInt& cap) {
  std::vector<BigInt> out;
  for (BigInt p = base; p <= cap; p *= base) out.push_back(p);
  return out;
}

}  // namespace

std::vector<FoundTriple> search_pair(unsigned long a, unsigned long b,
                                     const BigInt& cap) {
  if (a < 2 || b < 2) throw DomainError("search_pair: bases must be >= 2");
  struct Entry {
    unsigned long x, y, k;
  };
  const auto pa = powers_up_to(a, cap);
  const auto pb = powers_up_to(b, cap);

  // Every sum a^x + b^y, grouped by the primitive base of its power form.
  std::map<BigInt, std::vector<Entry>> groups;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    for (std::size_t j = 0; j < pb.size(); ++j) {
      BigInt s = pa[i] + pb[j];
      if (s > cap) break;
      PowerDecomposition pd = perfect_power_decompose(s);
      groups[pd.base].push_back({i + 1, j + 1, pd.exponent});
    }
  }

  std::vector<FoundTriple> out;
  for (const auto& [base, entries] : groups) {
    if (entries.size() < 2) continue;
    std::set<unsigned long> candidates;
    for (const auto& e : entries) {
      for (unsigned long d : divisors(e.k)) candidates.insert(d);
    }
    for (unsigned long d : candidates) {
      FoundTriple t{a, b, pow(base, d), {}};
      for (const auto& e : entries) {
        if (e.k % d == 0) t.solutions.push_back({e.x, e.y, e.k / d});
      }
      if (t.solutions.size() < 2) continue;
      std::sort(t.solutions.begin(), t.solutions.end());
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FoundTriple& l, const FoundTriple& r) { return l.c < r.c; });

  const Equation check_eq = Equation::make(a, b, 2);
  for (const auto& t : out) {
    Equation eq = check_eq;
    eq.c = t.c;
    for (const auto& s : t.solutions) {
      if (!eq.satisfied_by(s)) {
        throw InternalError("search_pair: solution failed revalidation");
      }
    }
  }
  return out;
}

std::string config_hash(const SearchConfig& config) {
  const std::string canonical = "a_max=" + std::to_string(config.a_max) +
                                ";b_max=" + std::to_string(config.b_max) +
                                ";cap=" + config.power_cap.get_str();
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SearchReport search_range(const SearchConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::string hash = config_hash(config);

  auto pairs = search_pairs(config.a_max, config.b_max);
  SearchReport report;
  report.a_max = config.a_max;
  report.b_max = config.b_max;
  report.power_cap = config.power_cap;
  report.pairs_total = pairs.size();
  report.jobs = std::max(1u, config.jobs);

  std::size_t end = pairs.size();
  if (config.stop_after) {
    auto it = std::find(pairs.begin(), pairs.end(), *config.stop_after);
    if (it == pairs.end()) {
      throw DomainError("search: stop_after pair is not in the search order");
    }
    end = static_cast<std::size_t>(it - pairs.begin()) + 1;
  }

  Checkpoint checkpoint{hash, {}, false};
  if (config.resume) {
    checkpoint = load_checkpoint(*config.checkpoint_path, hash);
    if (checkpoint.records.size() > pairs.size()) {
      throw CheckpointCorrupt("checkpoint has more records than pairs");
    }
    for (std::size_t i = 0; i < checkpoint.records.size(); ++i) {
      const auto& r = checkpoint.records[i];
      if (std::make_pair(r.a, r.b) != pairs[i]) {
        throw CheckpointCorrupt("checkpoint records are out of search order");
      }
    }
  }
  report.pairs_resumed = checkpoint.records.size();
  const std::size_t begin = checkpoint.records.size();

  // Workers fill slots; this thread consumes the completed prefix in order.
  const std::size_t todo = begin < end ? end - begin : 0;
  std::vector<std::optional<PairRecord>> slots(todo);
  std::mutex mu;
  std::condition_variable ready;
  std::size_t next_index = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next_index >= todo) return;
        i = next_index++;
      }
      const auto [a, b] = pairs[begin + i];
      PairRecord rec{a, b, {}, std::nullopt};
      try {
        rec.triples = search_pair(a, b, config.power_cap);
      } catch (const std::exception& e) {
        rec.failure = e.what();
      }
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(rec);
      }
      ready.notify_one();
    }
  };

  std::vector<std::thread> threads;
  for (unsigned t = 0; t < report.jobs && todo > 0; ++t) threads.emplace_back(worker);

  std::size_t since_save = 0;
  for (std::size_t i = 0; i < todo; ++i) {
    PairRecord rec;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      rec = std::move(*slots[i]);
      slots[i].reset();
    }
    checkpoint.records.push_back(std::move(rec));
    if (config.checkpoint_path && ++since_save >= config.checkpoint_every) {
      save_checkpoint(*config.checkpoint_path, checkpoint);
      since_save = 0;
    }
  }
  for (auto& t : threads) t.join();

  checkpoint.complete = checkpoint.records.size() == pairs.size();
  if (config.checkpoint_path) save_checkpoint(*config.checkpoint_path, checkpoint);

  for (const auto& rec : checkpoint.records) {
    report.triples.insert(report.triples.end(), rec.triples.begin(), rec.triples.end());
    if (rec.failure) report.failures.push_back({rec.a, rec.b, *rec.failure});
  }
  report.pairs_processed = checkpoint.records.size();
  report.complete = checkpoint.complete;
  report.elapsed_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
  return report;
}

namespace {

std::vector<Solution> within_cap(const KnownTriple& t, const BigInt& cap) {
  std::vector<Solution> out;
  for (const auto& s : t.solutions) {
    if (pow(t.c, s.z) <= cap) out.push_back(s);
  }
  return out;
}

}  // namespace

ConjectureDiff compare_with_conjecture(const SearchReport& report) {
  std::vector<KnownTriple> fixture = sporadic_triples();
  for (unsigned long n = 2;; ++n) {
    KnownTriple member = family_member(n);
    if (member.b > report.b_max) break;
    fixture.push_back(std::move(member));
  }

  auto key = [](const BigInt& a, const BigInt& b, const BigInt& c) {
    return std::make_tuple(a, b, c);
  };
  std::map<std::tuple<BigInt, BigInt, BigInt>, const FoundTriple*> found;
  for (const auto& t : report.triples) found[key(t.a, t.b, t.c)] = &t;

  ConjectureDiff diff;
  std::set<std::tuple<BigInt, BigInt, BigInt>> expected_keys;
  for (const auto& t : fixture) {
    auto k = key(t.a, t.b, t.c);
    // Family members can coincide with a sporadic entry in some ranges.
    if (!expected_keys.insert(k).second) continue;
    const auto in_cap = within_cap(t, report.power_cap);
    const bool in_range = t.a <= report.a_max && t.b <= report.b_max &&
                          in_cap.size() >= 2;
    auto it = found.find(k);
    if (it != found.end()) {
      diff.expected_and_found.push_back(t);
      if (it->second->solutions != in_cap) {
        diff.solution_mismatches.push_back(*it->second);
      }
    } else if (in_range) {
      diff.missing.push_back(t);
    } else {
      diff.expected_out_of_range.push_back(t);
    }
  }
  for (const auto& t : report.triples) {
    if (!expected_keys.contains(key(t.a, t.b, t.c))) diff.unexpected.push_back(t);
  }
  return diff;
}

}  // namespace expdio
