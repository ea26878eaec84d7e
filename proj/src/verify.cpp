#include "flagclass/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "flagclass/error.hpp"
#include "flagclass/kernels.hpp"
#include "flagclass/tzs.hpp"

namespace flagclass {

Json CheckResult::to_json() const {
  Json j;
  j["name"] = name;
  j["passed"] = passed;
  j["summary"] = summary;
  j["counterexample"] = counterexample;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

std::shared_ptr<const RootSystem> system_of(const LieType& t) {
  return std::make_shared<const RootSystem>(build_root_system(t));
}

std::vector<FlagSpec> corpus(int max_rank) {
  std::vector<FlagSpec> out;
  for (const auto& t : all_types_up_to(max_rank))
    for (auto& f : all_flags(system_of(t))) out.push_back(std::move(f));
  return out;
}

// Runs body, fills timing, converts escaping library errors into a failure.
template <class F>
CheckResult timed(std::string name, F&& body) {
  CheckResult r;
  r.name = std::move(name);
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

void fail(CheckResult& r, std::string summary, Json ce) {
  if (!r.passed) return;  // keep the first counterexample
  r.passed = false;
  r.summary = std::move(summary);
  r.counterexample = std::move(ce);
}

Json structure_json(const FlagSpec& f, const IACS& j) {
  Json c;
  c["flag"] = f.str();
  c["signs"] = Json(j.signs());
  return c;
}

}  // namespace

CheckResult check_tzs_roots(int max_rank, int pairs_per_type, std::uint64_t seed) {
  return timed("tzs_root_systems", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    int types = 0, chains = 0;
    for (const auto& t : all_types_up_to(max_rank)) {
      auto rs = system_of(t);
      FunctionalSet set = FunctionalSet::from_roots(*rs);
      ConnectivityReport rep = connectivity(set);
      ++types;
      if (!rep.connected) {
        fail(r, t.str() + " is not tzs-connected", to_json(set, rep));
        continue;
      }
      TripleGraph graph(set, rep.triples);
      std::uniform_int_distribution<int> pick(0, rs->size() - 1);
      for (int p = 0; p < pairs_per_type && rs->size() > 2; ++p) {
        int a = pick(rng), b = pick(rng);
        while (set.class_of(a) == set.class_of(b)) b = pick(rng);
        TzsChain chain = graph.shortest_chain(a, b);
        ++chains;
        if (auto why = validate_chain(set, chain)) fail(r, t.str() + ": " + *why, to_json(set, chain));
      }
    }
    if (r.passed) r.summary = std::to_string(types) + " types connected, " + std::to_string(chains) + " chains validated";
  });
}

CheckResult check_tzs_t_roots(int max_rank) {
  return timed("tzs_t_roots", [&](CheckResult& r) {
    int flags = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      ConnectivityReport rep = connectivity(ts.functionals());
      ++flags;
      if (!rep.connected) fail(r, f.str() + ": R_t is not tzs-connected", to_json(ts.functionals(), rep));
      for (const auto& w : rep.witnesses)
        if (auto why = validate_chain(ts.functionals(), w)) fail(r, f.str() + ": " + *why, Json(f.str()));
    }
    if (r.passed) r.summary = std::to_string(flags) + " flags, R_t connected with validated witnesses";
  });
}

CheckResult check_iacs_counts(int max_rank, int iacs_cap) {
  return timed("iacs_count", [&](CheckResult& r) {
    int flags = 0;
    std::uint64_t total = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      const std::uint64_t n = iacs_count(ts, iacs_cap);
      std::vector<bool> seen(n, false);
      std::uint64_t distinct = 0;
      std::uint64_t produced = 0;
      for (std::uint64_t m = 0; m < n; ++m) {
        IACS j(ts.s(), m);
        IACS back = IACS::from_signs(j.signs());
        ++produced;
        if (!seen[back.mask()]) {
          seen[back.mask()] = true;
          ++distinct;
        }
      }
      ++flags;
      total += distinct;
      if (distinct != (std::uint64_t{1} << ts.s()) || produced != distinct)
        fail(r, f.str() + ": " + std::to_string(distinct) + " distinct structures for s=" + std::to_string(ts.s()),
             Json(f.str()));
    }
    if (r.passed) r.summary = std::to_string(flags) + " flags, " + std::to_string(total) + " structures, all 2^s";
  });
}

IntegrabilityChecks check_integrability(int max_rank, int iacs_cap, bool parallel, int full_fm_max_s) {
  IntegrabilityChecks out;
  std::uint64_t refuted = 0, solved = 0;
  out.four_way = timed("integrability_four_way", [&](CheckResult& r) {
    int flags = 0;
    std::uint64_t total = 0, integrable = 0;
    std::vector<std::pair<std::string, IntegrabilityCensus>> censuses;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      const std::uint64_t n = iacs_count(ts, iacs_cap);
      StructureConstants sc = compute_structure_constants(f.root_system_ptr());
      CensusContext ctx(ts, sc);
      IntegrabilityCensus c =
          parallel ? integrability_census_parallel(ctx, 0, n) : integrability_census_serial(ctx, 0, n);
      ++flags;
      total += c.total;
      integrable += c.j_complex;
      if (c.total != n || c.disagreements || c.in_chambers != ctx.chambers().chambers.size()) {
        Json ce = Json(f.str());
        if (c.first_disagreement) ce = structure_json(f, IACS(ts.s(), *c.first_disagreement));
        fail(r, f.str() + ": " + std::to_string(c.disagreements) + " disagreements", ce);
      }
      refuted += c.ak_refuted;
      if (c.ak_violations)
        fail(out.ak_equals_k, f.str() + ": a (0,3)-triple without a sign-definite equation",
             structure_json(f, IACS(ts.s(), *c.first_ak_violation)));
      if (ts.s() <= full_fm_max_s) {
        for (std::uint64_t m = 0; m < n; ++m) {
          IACS j(ts.s(), m);
          if (!has_zero_three(j, ts)) continue;
          MetricFeasibility plain = ak_feasibility(j, ts, false);
          MetricFeasibility pre = ak_feasibility(j, ts, true);
          ++solved;
          if (plain.feasible || !certifies_infeasible(plain.system, plain.certificate) ||
              !certifies_infeasible(pre.system, pre.certificate))
            fail(out.ak_equals_k, f.str() + ": Kahler system feasible with a (0,3)-triple", structure_json(f, j));
        }
      }
    }
    if (r.passed)
      r.summary = std::to_string(flags) + " flags, " + std::to_string(total) + " structures, " +
                  std::to_string(integrable) + " integrable, zero disagreements";
  });
  out.ak_equals_k.name = "ak_equals_k";
  out.ak_equals_k.seconds = out.four_way.seconds;
  if (!out.four_way.passed && out.four_way.summary.rfind("error", 0) == 0)
    fail(out.ak_equals_k, out.four_way.summary, nullptr);
  if (out.ak_equals_k.passed)
    out.ak_equals_k.summary = std::to_string(refuted) + " structures with a (0,3)-triple refuted by certificate, " +
                              std::to_string(solved) + " also by plain elimination";
  return out;
}

CheckResult check_isotropy_irreducible(int max_rank) {
  return timed("isotropy_irreducible", [&](CheckResult& r) {
    int flags = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      if (ts.s() != 1) continue;
      ++flags;
      StructureConstants sc = compute_structure_constants(f.root_system_ptr());
      RootLevelOracle oracle(ts, sc);
      for (const auto& j : enumerate_iacs(ts)) {
        if (!is_integrable(j, ts) || !oracle.integrable(j)) fail(r, f.str() + ": non-integrable", structure_json(f, j));
        for (const Rational& l : {Rational(1), Rational(2), Rational(7, 3)}) {
          InvariantMetric g({l});
          if (!is_g1(g, j, ts) || !oracle.g1(g, j)) fail(r, f.str() + ": not G1", structure_json(f, j));
        }
      }
    }
    if (r.passed) r.summary = std::to_string(flags) + " isotropy irreducible flags, all structures integrable and G1";
    if (flags == 0) fail(r, "no flag with s = 1 in scope", nullptr);
  });
}

CheckResult check_two_summand(int max_rank) {
  return timed("two_summand", [&](CheckResult& r) {
    int flags = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      if (ts.s() != 2) continue;
      const Coords& d = ts.t_root(0).coords;
      Coords twice(d);
      for (int& x : twice) x *= 2;
      if (ts.t_root(1).coords != twice) continue;
      ++flags;
      StructureConstants sc = compute_structure_constants(f.root_system_ptr());
      IACS j = IACS::from_signs({-1, 1});
      if (is_integrable(j, ts) || nijenhuis_oracle(ts, sc, j))
        fail(r, f.str() + ": eps_d=-1, eps_2d=+1 reported integrable", structure_json(f, j));
    }
    if (r.passed) r.summary = std::to_string(flags) + " flags with R_t = {+-d, +-2d}, all reported non-integrable";
    if (flags == 0) fail(r, "no two-summand flag in scope", nullptr);
  });
}

CheckResult check_normal_metric(int max_rank, int iacs_cap) {
  return timed("normal_metric_unique", [&](CheckResult& r) {
    int flags = 0;
    std::size_t certs = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      if (ts.s() < 2) continue;
      NormalMetricReport rep = normal_metric_unique(ts, iacs_cap);
      ++flags;
      certs += rep.certificates.size();
      const std::size_t pairs = static_cast<std::size_t>(ts.s()) * (ts.s() - 1) / 2;
      bool ok = rep.holds && rep.certificates_valid && rep.certificates.size() == pairs;
      for (const auto& c : rep.certificates)
        if (validate_certificate(ts, c)) ok = false;
      if (!ok) fail(r, f.str() + ": " + (rep.detail.empty() ? "certificate incomplete" : rep.detail), Json(f.str()));
    }
    if (r.passed)
      r.summary = std::to_string(flags) + " flags with s >= 2, " + std::to_string(certs) + " pair certificates validated";
  });
}

CheckResult check_g1_oracle(int max_rank, const std::vector<int>& values, bool parallel) {
  return timed("g1_oracle", [&](CheckResult& r) {
    int flags = 0;
    std::uint64_t pairs = 0, inclusion_gaps = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      StructureConstants sc = compute_structure_constants(f.root_system_ptr());
      CensusContext ctx(ts, sc);
      G1Census c = parallel ? g1_census_parallel(ctx, values) : g1_census_serial(ctx, values);
      ++flags;
      pairs += c.pairs;
      inclusion_gaps += c.inclusion_disagreements;
      if (c.disagreements) {
        Json ce = structure_json(f, IACS(ts.s(), c.first_disagreement->first));
        ce["lambdas"] = to_json(grid_metric(ts.s(), values, c.first_disagreement->second).lambdas());
        fail(r, f.str() + ": " + std::to_string(c.disagreements) + " disagreements", ce);
      }
    }
    if (r.passed)
      r.summary = std::to_string(flags) + " flags, " + std::to_string(pairs) +
                  " (J, g) pairs, zero disagreements (inclusion test differs on " + std::to_string(inclusion_gaps) + ")";
  });
}

CheckResult check_chevalley(int max_rank, bool inject_fault) {
  return timed("chevalley", [&](CheckResult& r) {
    int types = 0;
    for (const auto& t : all_types_up_to(max_rank)) {
      auto rs = system_of(t);
      StructureConstants sc = compute_structure_constants(rs);
      if (inject_fault && t.str() == "A2") {
        const auto& ex = sc.extraspecial_pairs();
        sc = sc.with_flipped_entry(ex.front().first, ex.front().second);
      }
      ++types;
      JacobiResult jr = verify_jacobi(sc);
      if (!jr.holds) {
        Json ce;
        ce["type"] = t.str();
        Json roots = Json::array();
        for (int i : *jr.counterexample) roots.push_back(Json(rs->root(i).coords()));
        ce["triple"] = std::move(roots);
        fail(r, t.str() + ": Jacobi fails: " + jr.detail, ce);
        continue;
      }
      TableCheck tc = check_table_invariants(sc);
      if (!tc.holds) fail(r, t.str() + ": " + tc.detail, Json(t.str()));
    }
    if (r.passed) r.summary = std::to_string(types) + " types: Jacobi, antisymmetry, cyclic identity and magnitudes hold";
  });
}

CheckResult check_weyl_orders(int max_rank, std::uint64_t weyl_cap) {
  return timed("weyl_orders", [&](CheckResult& r) {
    int types = 0;
    for (const auto& t : all_types_up_to(max_rank)) {
      if (weyl_order(t) > weyl_cap) continue;
      auto rs = system_of(t);
      WeylGroup w = generate_weyl(rs, weyl_cap);
      ++types;
      if (w.order() != weyl_order(t))
        fail(r, t.str() + ": order " + std::to_string(w.order()) + " vs " + std::to_string(weyl_order(t)), Json(t.str()));
      for (const auto& e : w.elements())
        for (int a = 0; a < rs->size() && r.passed; ++a)
          for (int b = a; b < rs->size(); ++b)
            if (rs->inner_product(rs->root(e(a)), rs->root(e(b))) != rs->inner_product(rs->root(a), rs->root(b))) {
              fail(r, t.str() + ": element does not preserve the pairing", Json(e.perm()));
              break;
            }
    }
    if (r.passed) r.summary = std::to_string(types) + " groups of the expected order, pairing preserved";
  });
}

CheckResult check_a_theta(int max_rank, std::uint64_t weyl_cap) {
  return timed("a_theta", [&](CheckResult& r) {
    int flags = 0;
    std::size_t actions = 0;
    for (const auto& t : all_types_up_to(max_rank)) {
      if (weyl_order(t) > weyl_cap) continue;
      auto rs = system_of(t);
      WeylGroup w = generate_weyl(rs, weyl_cap);
      for (const auto& f : all_flags(rs)) {
        TRootSystem ts(f);
        AThetaResult at = a_theta(w, f);
        ++flags;
        if (!at.r_m_criterion_holds) {
          fail(r, f.str() + ": A_Theta membership differs from R_M preservation", Json(w.element(*at.counterexample).perm()));
          continue;
        }
        IACS probe(ts.s(), 0);
        for (auto i : at.members) {
          act_on_iacs(w.element(i), ts, probe);  // throws if not well defined
          ++actions;
        }
      }
    }
    if (r.passed)
      r.summary = std::to_string(flags) + " flags: stabilizer of R_Theta = preserver of R_M, " +
                  std::to_string(actions) + " well-defined actions";
  });
}

namespace {

// Label bits: 1 integrable, 2 Kahler, 4 QK, 8 G1.
class FastLabels {
 public:
  FastLabels(const IACS& j, const TRootSystem& ts) : integrable_(is_integrable(j, ts)) {
    for (const auto& t : ts.triples()) {
      Row row;
      row.zero_three = classify_triple(j, ts, t) == TripleClass::ZeroThree;
      for (int m : t.members) {
        row.cls[row.n] = ts.class_of(m);
        row.coeff[row.n++] = j.sign_at(ts, m);
      }
      rows_.push_back(row);
    }
  }

  unsigned labels(const std::vector<int>& lambda) const {
    bool qk = true, all_zero = true, g1 = true;
    for (const auto& row : rows_) {
      int sum = 0;
      for (int k = 0; k < row.n; ++k) sum += row.coeff[k] * lambda[row.cls[k]];
      if (sum != 0) {
        all_zero = false;
        if (!row.zero_three) qk = false;
      }
      if (row.zero_three &&
          (lambda[row.cls[0]] != lambda[row.cls[1]] || lambda[row.cls[0]] != lambda[row.cls[2]]))
        g1 = false;
    }
    if (all_zero && !integrable_) throw Error(ErrorKind::InvariantViolation, "almost Kahler without integrability");
    return (integrable_ ? 1U : 0U) | (integrable_ && all_zero ? 2U : 0U) | (qk ? 4U : 0U) | (g1 ? 8U : 0U);
  }

 private:
  struct Row {
    int n = 0;
    int cls[3];
    int coeff[3];
    bool zero_three = false;
  };
  bool integrable_;
  std::vector<Row> rows_;
};

unsigned label_bits(const LabelSet& l) {
  return (l.integrable ? 1U : 0U) | (l.kahler ? 2U : 0U) | (l.qk ? 4U : 0U) | (l.g1 ? 8U : 0U);
}

}  // namespace

CheckResult check_orbit_labels(int max_rank, const std::vector<int>& values, std::uint64_t weyl_cap) {
  return timed("orbit_labels", [&](CheckResult& r) {
    int flags = 0;
    std::uint64_t checked = 0;
    for (const auto& t : all_types_up_to(max_rank)) {
      if (weyl_order(t) > weyl_cap) continue;
      auto rs = system_of(t);
      WeylGroup w = generate_weyl(rs, weyl_cap);
      for (const auto& f : all_flags(rs)) {
        TRootSystem ts(f);
        const int s = ts.s();
        const std::uint64_t nj = iacs_count(ts, kMaxMaskBits);
        const std::uint64_t ng = grid_size(s, values.size());
        std::vector<std::vector<int>> grid(ng);
        for (std::uint64_t gi = 0; gi < ng; ++gi) {
          std::uint64_t i = gi;
          for (int k = 0; k < s; ++k, i /= values.size()) grid[gi].push_back(values[i % values.size()]);
        }
        std::vector<unsigned char> table(nj * ng);
        for (std::uint64_t m = 0; m < nj; ++m) {
          FastLabels fl(IACS(s, m), ts);
          for (std::uint64_t gi = 0; gi < ng; ++gi) table[m * ng + gi] = static_cast<unsigned char>(fl.labels(grid[gi]));
        }
        // the fast table agrees with the classifier on a spread of entries
        for (std::uint64_t e = 0; e < nj * ng; e += 1 + nj * ng / 500) {
          IACS j(s, e / ng);
          std::vector<Rational> l(grid[e % ng].begin(), grid[e % ng].end());
          if (label_bits(classify_structure(InvariantMetric(l), j, ts)) != table[e])
            fail(r, f.str() + ": fast labels differ from classify_structure", structure_json(f, j));
        }
        auto digit = [&](int v) {
          return static_cast<std::uint64_t>(std::find(values.begin(), values.end(), v) - values.begin());
        };
        AThetaResult at = a_theta(w, f);
        std::vector<Rational> distinct(s);
        for (int k = 0; k < s; ++k) distinct[k] = Rational(k + 1);
        for (auto idx : at.members) {
          const WeylElement& omega = w.element(idx);
          InvariantMetric moved = act_on_metric(omega, ts, InvariantMetric(distinct));
          std::vector<int> source(s);  // new lambda_k = old lambda_{source[k]}
          for (int k = 0; k < s; ++k) source[k] = static_cast<int>(moved.lambda(k).num()) - 1;
          std::vector<std::uint64_t> jimg(nj), gimg(ng);
          for (std::uint64_t m = 0; m < nj; ++m) jimg[m] = act_on_iacs(omega, ts, IACS(s, m)).mask();
          for (std::uint64_t gi = 0; gi < ng; ++gi) {
            std::uint64_t out = 0, place = 1;
            for (int k = 0; k < s; ++k, place *= values.size()) out += digit(grid[gi][source[k]]) * place;
            gimg[gi] = out;
          }
          for (std::uint64_t m = 0; m < nj && r.passed; ++m)
            for (std::uint64_t gi = 0; gi < ng; ++gi)
              if (table[m * ng + gi] != table[jimg[m] * ng + gimg[gi]]) {
                Json ce = structure_json(f, IACS(s, m));
                ce["lambdas"] = Json(grid[gi]);
                fail(r, f.str() + ": labels change along an orbit", ce);
                break;
              }
          checked += nj * ng;
        }
        ++flags;
      }
    }
    if (r.passed)
      r.summary = std::to_string(flags) + " flags, " + std::to_string(checked) + " (omega, J, g) label comparisons";
  });
}

CheckResult check_a2_end_to_end() {
  return timed("a2_end_to_end", [&](CheckResult& r) {
    FlagSpec f = FlagSpec::parse("A2");
    TRootSystem ts(f);
    auto structures = enumerate_iacs(ts);
    std::size_t integrable = 0;
    for (const auto& j : structures) integrable += is_integrable(j, ts);
    if (structures.size() != 8 || integrable != 6)
      fail(r, "expected 8 structures, 6 integrable", Json::array({structures.size(), integrable}));

    WeylGroup w = generate_weyl(f.root_system_ptr());
    AThetaResult at = a_theta(w, f);
    std::vector<WeylElement> sub;
    for (auto i : at.members) sub.push_back(w.element(i));
    std::vector<std::pair<IACS, InvariantMetric>> list;
    for (const auto& j : structures) list.emplace_back(j, InvariantMetric::normal(3));
    OrbitPartition p = orbits(sub, ts, list);
    auto sizes = p.sizes();
    std::sort(sizes.begin(), sizes.end());
    if (sizes != std::vector<std::size_t>{2, 6}) fail(r, "orbit sizes are not {2, 6}", Json(sizes));
    for (const auto& orbit : p.orbits) {
      bool first = is_integrable(structures[orbit.front()], ts);
      for (int m : orbit)
        if (is_integrable(structures[m], ts) != first) fail(r, "an orbit mixes integrable and non-integrable", Json(orbit));
    }

    IACS plus = IACS::from_signs({1, 1, 1});
    IACS mixed = IACS::from_signs({1, 1, -1});
    MetricFeasibility qk = qk_feasibility(plus, ts);
    if (!qk.feasible || qk.sample != std::vector<Rational>{1, 1, 2}) fail(r, "QK sample for (+1,+1,+1) is not (1,1,2)", nullptr);
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int c = 1; c <= 8; ++c) {
          InvariantMetric g({a, b, c});
          LabelSet lp = classify_structure(g, plus, ts);
          if (lp.kahler != (c == a + b)) fail(r, "Kahler family is not lambda_3 = lambda_1 + lambda_2", Json(g.str()));
          LabelSet lm = classify_structure(g, mixed, ts);
          if (!lm.qk) fail(r, "(+1,+1,-1) not QK for some metric", Json(g.str()));
          if (lm.g1 != (a == b && b == c)) fail(r, "(+1,+1,-1) G1 set is not the constant metrics", Json(g.str()));
        }
    if (r.passed) r.summary = "8 structures, 6 integrable in one orbit, 2 in an orbit of size 2, Kahler/QK/G1 families as expected";
  });
}

CheckResult check_triple_lifts(int max_rank) {
  return timed("triple_lifts", [&](CheckResult& r) {
    int flags = 0;
    std::size_t triples = 0;
    for (const auto& f : corpus(max_rank)) {
      TRootSystem ts(f);
      LiftReport rep = check_triple_lifts(ts);
      ++flags;
      triples += ts.triples().size();
      if (!rep.holds) fail(r, f.str() + ": a zero-sum t-root triple has no root-level lift", to_json(ts.functionals(), rep.unlifted.front()));
    }
    if (r.passed) r.summary = std::to_string(flags) + " flags, " + std::to_string(triples) + " t-root triples lifted";
  });
}

std::vector<CheckResult> run_suite(const SuiteOptions& opt) {
  const int r = opt.max_rank;
  const int small = std::min(r, 3);
  std::vector<CheckResult> out;
  out.push_back(check_tzs_roots(r, 50, opt.seed));
  out.push_back(check_tzs_t_roots(r));
  out.push_back(check_iacs_counts(r, opt.iacs_cap));
  auto integ = check_integrability(r, opt.iacs_cap, opt.parallel, 13);
  out.push_back(integ.four_way);
  out.push_back(integ.ak_equals_k);
  out.push_back(check_isotropy_irreducible(r));
  if (r >= 2) out.push_back(check_two_summand(r));
  out.push_back(check_normal_metric(r, opt.iacs_cap));
  out.push_back(check_g1_oracle(small, {1, 2, 3}, opt.parallel));
  out.push_back(check_chevalley(r, opt.inject_fault));
  out.push_back(check_weyl_orders(r, opt.weyl_cap));
  out.push_back(check_a_theta(r, opt.weyl_cap));
  out.push_back(check_orbit_labels(small, {1, 2, 3}, opt.weyl_cap));
  if (r >= 2) out.push_back(check_a2_end_to_end());
  out.push_back(check_triple_lifts(r));
  return out;
}

}  // namespace flagclass
