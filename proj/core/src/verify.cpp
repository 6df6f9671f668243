#include "ppdet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "ppdet/families.hpp"
#include "ppdet/hyper.hpp"
#include "ppdet/interp.hpp"
#include "ppdet/lattice.hpp"
#include "ppdet/linalg.hpp"

namespace ppdet {

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [](const IdentityRecord& r) { return !r.equal; }));
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;
using Task = std::function<IdentityRecord()>;

std::string p(long v) { return std::to_string(v); }

IdentityRecord record_of(std::string identity, Params params, Rational lhs,
                         Rational rhs) {
  IdentityRecord r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.equal = (lhs == rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

IdentityRecord indicator(std::string identity, Params params, bool ok) {
  return record_of(std::move(identity), std::move(params),
                   Rational(ok ? 1 : 0), Rational(1));
}

// Grid points are dispatched to a bounded worker pool; results are merged
// in grid order, so a report is independent of scheduling. When the
// deadline passes, remaining tasks are skipped and the record list is cut
// at the first unfinished slot.
void run_tasks(const std::vector<Task>& tasks, const SweepOptions& opts,
               VerificationReport& report) {
  const std::string guard_identity = report.suite + ".guard";
  std::vector<std::optional<IdentityRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      if (opts.deadline &&
          std::chrono::steady_clock::now() >= *opts.deadline) {
        aborted.store(true);
        return;
      }
      const auto t0 = std::chrono::steady_clock::now();
      IdentityRecord r;
      try {
        r = tasks[idx]();
      } catch (const std::exception& e) {
        // A guard violation at one grid point is reported, not fatal.
        r.identity = guard_identity;
        r.params = {{"error", e.what()}};
        r.lhs = r.rhs = Rational(0);
        r.equal = true;
      }
      if (opts.timings)
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      slots[idx] = std::move(r);
    }
  };

  unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(tasks.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (auto& slot : slots) {
    if (!slot) {
      report.aborted = true;
      break;
    }
    report.records.push_back(std::move(*slot));
  }
  if (aborted.load()) report.aborted = true;
}

// ---- suite builders ------------------------------------------------------

void build_theorem1(const SweepOptions& o, std::vector<Task>& tasks) {
  const long ct_n = o.cap ? std::min(o.max_n, 4L) : std::min(o.max_n, 3L);
  const long ct_x = o.cap ? std::min(o.max_x, 3L) : std::min(o.max_x, 2L);
  for (long x = 0; x <= o.max_x; ++x)
    for (long n = 1; n <= o.max_n; ++n) {
      Params prm{{"n", p(n)}, {"x", p(x)}};
      const Rational formula = rhs_thm11(x, n);
      if (x <= ct_x && n <= ct_n) {
        auto cap = o.cap;
        tasks.push_back([=] {
          return record_of("theorem1.ct_series=formula", prm,
                           ct_via_series(x, n, cap), formula);
        });
      }
      tasks.push_back([=] {
        return record_of("theorem1.minor_sum=formula", prm,
                         minor_sum(matrix_21(x, n), n), formula);
      });
      if (x <= 3 && n <= 4) {
        tasks.push_back([=] {
          return record_of("theorem1.spp_count=formula", prm,
                           Rational(enumerate_spp(x, n)), formula);
        });
        tasks.push_back([=] {
          return record_of("theorem1.family_count=formula", prm,
                           Rational(count_families(x, n)), formula);
        });
        tasks.push_back([=] {
          auto families = enumerate_families(x, n);
          std::vector<ShiftedPlanePartition> images;
          for (const auto& f : families) images.push_back(paths_to_spp(f, x, n));
          std::sort(images.begin(), images.end(),
                    [](const auto& a, const auto& b) { return a.rows < b.rows; });
          const bool distinct =
              std::adjacent_find(images.begin(), images.end()) == images.end();
          return record_of("theorem1.bijection_image=spp_count", prm,
                           Rational(distinct ? Integer(images.size())
                                             : Integer(-1)),
                           Rational(enumerate_spp(x, n)));
        });
      }
      tasks.push_back([=] {
        Rational pf = (n % 2 == 0) ? pfaffian(q_matrix_even(x, n))
                                   : pfaffian(q_matrix_odd(x, n));
        return record_of("theorem1.pfaffian=formula", prm, pf, formula);
      });
      tasks.push_back([=] {
        Rational sq = formula * formula;
        Rational dd;
        if (n % 2 == 0) {
          dd = det(matrix_22a(x, n));
        } else {
          Integer four_x;
          mpz_ui_pow_ui(four_x.get_mpz_t(), 4, static_cast<unsigned long>(x));
          dd = Rational(four_x) * det(matrix_22b(x, n));
        }
        return record_of("theorem1.count_squared=det", prm, sq, dd);
      });
    }
  // closed-form pair counts against brute force
  for (long x = 0; x <= std::min(o.max_x, 2L); ++x)
    for (long i = 0; i <= 1; ++i)
      for (long j = i + 1; j <= 3; ++j) {
        Params prm{{"i", p(i)}, {"j", p(j)}, {"x", p(x)}};
        tasks.push_back([=] {
          return record_of("theorem1.q_entry=pair_count", prm, q_entry(x, i, j),
                           Rational(count_nonintersecting_pairs(x, i, j)));
        });
      }
}

void build_thm2(const SweepOptions& o, std::vector<Task>& tasks) {
  const long nmax = std::min(o.max_n, 8L);
  for (long m = 0; m <= std::min(4L, nmax); ++m)
    for (long n = std::max(m, 1L); n <= nmax; ++n) {
      Params prm{{"m", p(m)}, {"n", p(n)}};
      tasks.push_back([=] {
        ResidualReport a = p1_via_step6(m, n);
        ResidualReport b = p1_numeric(m, n);
        return indicator("thm2.step6=integer_nodes", prm,
                         a.polynomial == b.polynomial);
      });
      tasks.push_back([=] {
        ResidualReport a = p1_via_step6(m, n);
        const auto deg = a.polynomial.degree();
        return indicator("thm2.degree_bound", prm, !deg || *deg <= m / 2);
      });
      if (n % 2 == 1 && m % 2 == 0) {
        tasks.push_back([=] {
          ResidualReport a = p1_via_step6(m, n);
          return indicator(
              "thm2.root_at_minus_half_mn", prm,
              a.polynomial.eval(make_rational(-(m + n), 2)) == 0);
        });
      }
    }
}

void build_cor3(const SweepOptions& o, std::vector<Task>& tasks) {
  for (long m = 0; m <= 4; ++m)
    for (long n = std::max(m, m == 0 ? 0L : 1L); n <= o.max_n; ++n)
      for (long x = 0; x <= o.max_x; ++x) {
        Params prm{{"m", p(m)}, {"n", p(n)}, {"x", p(x)}};
        tasks.push_back([=] {
          return record_of("cor3.det=product", prm, det(d_matrix(x, x + m, n)),
                           rhs_cor3(x, m, n));
        });
      }
}

void build_thm8(const SweepOptions& o, std::vector<Task>& tasks) {
  for (long x = 0; x <= o.max_x; ++x)
    for (long y = 0; y <= o.max_y; ++y)
      for (long n = 0; n <= o.max_n; ++n) {
        Params prm{{"n", p(n)}, {"x", p(x)}, {"y", p(y)}};
        tasks.push_back([=] {
          return record_of("thm8.det=product_sum", prm, det(e_matrix(x, y, n)),
                           rhs_thm8(x, y, n));
        });
      }
}

void build_thm9(const SweepOptions& o, std::vector<Task>& tasks) {
  for (long n = 0; n <= o.max_n; ++n)
    for (long m = 0; m <= n; ++m)
      for (long x = 0; x <= o.max_x; ++x) {
        Params prm{{"m", p(m)}, {"n", p(n)}, {"x", p(x)}};
        tasks.push_back([=] {
          return record_of("thm9.rhs9=rhs8", prm, rhs_thm9(x, m, n),
                           rhs_thm8(x, x + m, n));
        });
        tasks.push_back([=] {
          Thm9SumCheck c = thm9_sum(Rational(x), m, n);
          return record_of("thm9.sum_identity", prm, c.lhs, c.rhs);
        });
      }
}

void build_thm10(const SweepOptions& o, std::vector<Task>& tasks) {
  for (long x = 0; x <= o.max_x; ++x)
    for (long y = 0; y <= o.max_y; ++y)
      for (long n = 1; n <= o.max_n; ++n) {
        Params prm{{"n", p(n)}, {"x", p(x)}, {"y", p(y)}};
        tasks.push_back([=] {
          return record_of("thm10.det_factorial=product", prm,
                           det(ab_matrix(x, y, n, AbVariant::factorial)),
                           rhs_thm10(x, y, n, AbVariant::factorial));
        });
        tasks.push_back([=] {
          return record_of("thm10.det_binomial=product", prm,
                           det(ab_matrix(x, y, n, AbVariant::binomial)),
                           rhs_thm10(x, y, n, AbVariant::binomial));
        });
      }
  for (long n = 1; n <= std::min(o.max_n, 4L); ++n) {
    Params prm{{"n", p(n)}, {"x", p(2)}};
    tasks.push_back([=] {
      return record_of("thm10.andrews_burge_det=product", prm,
                       det(andrews_burge_matrix(2, n)),
                       rhs_thm10(2, 1, n, AbVariant::binomial));
    });
    Params prm2{{"n", p(n)}};
    tasks.push_back([=] {
      return record_of("thm10.x1_y0_det=count_squared", prm2,
                       det(ab_matrix(1, 0, n, AbVariant::binomial)),
                       rhs_thm11(0, n) * rhs_thm11(0, n));
    });
  }
}

void build_thm11(const SweepOptions& o, std::vector<Task>& tasks) {
  const long ct_n = o.cap ? std::min(o.max_n, 4L) : std::min(o.max_n, 3L);
  const long ct_x = o.cap ? std::min(o.max_x, 3L) : std::min(o.max_x, 2L);
  for (long x = 0; x <= o.max_x; ++x)
    for (long n = 1; n <= o.max_n; ++n) {
      Params prm{{"n", p(n)}, {"x", p(x)}};
      if (x <= ct_x && n <= ct_n) {
        auto cap = o.cap;
        tasks.push_back([=] {
          return record_of("thm11.product=ct_series", prm, rhs_thm11(x, n),
                           ct_via_series(x, n, cap));
        });
      }
      tasks.push_back([=] {
        Rational pf = (n % 2 == 0) ? pfaffian(q_matrix_even(x, n))
                                   : pfaffian(q_matrix_odd(x, n));
        return record_of("thm11.product=pfaffian", prm, rhs_thm11(x, n), pf);
      });
    }
}

void build_thm12(const SweepOptions& o, std::vector<Task>& tasks) {
  for (long x = 0; x <= std::min(o.max_x, 2L); ++x)
    for (long y = 0; y <= std::min(o.max_y, 2L); ++y)
      for (long n = 0; n <= std::min(o.max_n, 3L); ++n) {
        Params prm{{"n", p(n)}, {"x", p(x)}, {"y", p(y)}};
        tasks.push_back([=] {
          return record_of("thm12.ct=product_sum", prm,
                           ct_laurent_thm12(x, y, n), rhs_thm12(x, y, n));
        });
      }
}

void build_thm13(const SweepOptions& o, std::vector<Task>& tasks) {
  for (long x = 0; x <= std::min(o.max_x, 2L); ++x)
    for (long y = 0; y <= std::min(o.max_y, 2L); ++y)
      for (long n = 0; n <= std::min(o.max_n, 3L); ++n) {
        Params prm{{"n", p(n)}, {"x", p(x)}, {"y", p(y)}};
        tasks.push_back([=] {
          return record_of("thm13.ct=product", prm, ct_laurent_thm13(x, y, n),
                           rhs_thm13(x, y, n));
        });
      }
}

void build_appendix(const SweepOptions& o, std::vector<Task>& tasks) {
  const std::vector<Rational> a_grid{Rational(0), Rational(1), Rational(2),
                                     Rational(3), make_rational(1, 2)};
  const std::vector<Rational> b_grid{Rational(1), Rational(2), Rational(3),
                                     make_rational(5, 2), make_rational(7, 2)};
  const long nmax = std::min(o.max_n, 8L);
  for (long n = 1; n <= nmax; ++n) {
    for (const Rational& A : a_grid)
      for (const Rational& B : b_grid) {
        Params prm{{"A", to_string(A)}, {"B", to_string(B)}, {"n", p(n)}};
        tasks.push_back([=] {
          BothSides c = lemma_a3_check(n, A, B);
          return record_of("appendix.lemma_a3", prm, c.lhs, c.rhs);
        });
        tasks.push_back([=] {
          BothSides c = lemma_a4_check(n, A, B);
          return record_of("appendix.lemma_a4", prm, c.lhs, c.rhs);
        });
      }
    for (const Rational& B : b_grid) {
      Params prm{{"B", to_string(B)}, {"n", p(n)}};
      tasks.push_back([=] {
        BothSides c = cor_a5_check(n, B);
        return record_of("appendix.cor_a5", prm, c.lhs, c.rhs);
      });
      tasks.push_back([=] {
        BothSides c = lemma_a6_check(n, B);
        return record_of("appendix.lemma_a6", prm, c.lhs, c.rhs);
      });
    }
  }
  // Vandermonde on a rational grid
  const std::vector<Rational> va{Rational(0),          Rational(1),
                                 Rational(2),          Rational(3),
                                 Rational(-2),         make_rational(1, 2),
                                 make_rational(-3, 2), make_rational(5, 3),
                                 make_rational(7, 2),  make_rational(-1, 3)};
  const std::vector<Rational> vc{Rational(1), Rational(2), make_rational(5, 2),
                                 make_rational(7, 3), Rational(4)};
  for (const Rational& a : va)
    for (const Rational& c : vc)
      for (long n = 1; n <= 2; ++n) {
        Params prm{{"a", to_string(a)}, {"c", to_string(c)}, {"n", p(n)}};
        tasks.push_back([=] {
          BothSides r = vandermonde_check(a, n, c);
          return record_of("appendix.vandermonde", prm, r.lhs, r.rhs);
        });
      }
  // elementary-symmetric degree probes and the shifted-factorial
  // coefficient analogue
  const std::vector<Rational> esym_a{Rational(0), Rational(1), Rational(-2)};
  for (const Rational& a : esym_a)
    for (long k = 0; k <= 3; ++k) {
      Params prm{{"a", to_string(a)}, {"k", p(k)}};
      tasks.push_back([=] {
        const bool ok = degree_probe(
            [&](long nn) { return esym(a, nn, k); }, 2 * k, 0, 2 * k + 3);
        return indicator("appendix.esym_degree_2k", prm, ok);
      });
    }
  for (const Rational& a : esym_a)
    for (long pdeg = 0; pdeg <= 3; ++pdeg) {
      Params prm{{"a", to_string(a)}, {"p", p(pdeg)}};
      tasks.push_back([=] {
        const bool ok = degree_probe(
            [&](long j) {
              // coefficient of x^(j-p) in (x+a)(x+a+1)...(x+a+j-1)
              UniPoly poch(Rational(1));
              for (long t = 0; t < j; ++t)
                poch = poch * UniPoly::from_coeffs({a + t, Rational(1)});
              if (j < pdeg) return Rational(0);
              return poch.coeff(static_cast<std::size_t>(j - pdeg));
            },
            2 * pdeg, 0, 2 * pdeg + 3);
        return indicator("appendix.pochhammer_coeff_degree", prm, ok);
      });
    }
  // Dodgson-style consistency on the e-matrix family
  for (long n = 3; n <= std::min(o.max_n, 5L); ++n)
    for (long x = 0; x <= std::min(o.max_x, 2L); ++x)
      for (long y = 0; y <= std::min(o.max_y, 2L); ++y) {
        Params prm{{"n", p(n)}, {"x", p(x)}, {"y", p(y)}};
        tasks.push_back([=] {
          return indicator("appendix.desnanot_jacobi_e", prm,
                           desnanot_jacobi_check(e_matrix(x, y, n)));
        });
      }
}

struct SuiteBuilder {
  const char* name;
  void (*build)(const SweepOptions&, std::vector<Task>&);
};

constexpr SuiteBuilder kSuites[] = {
    {"theorem1", build_theorem1}, {"thm2", build_thm2},
    {"cor3", build_cor3},         {"thm8", build_thm8},
    {"thm9", build_thm9},         {"thm10", build_thm10},
    {"thm11", build_thm11},       {"thm12", build_thm12},
    {"thm13", build_thm13},       {"appendix", build_appendix},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.emplace_back(s.name);
  names.emplace_back("all");
  return names;
}

VerificationReport run_suite(const std::string& name,
                             const SweepOptions& opts) {
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& s : kSuites) {
    if (name == s.name || name == "all") {
      s.build(opts, tasks);
      found = true;
    }
  }
  if (!found && name != "all")
    throw std::invalid_argument("unknown suite: " + name);

  VerificationReport report;
  report.suite = name;
  {
    std::ostringstream g;
    g << "max_n=" << opts.max_n << " max_x=" << opts.max_x
      << " max_y=" << opts.max_y;
    if (opts.cap) g << " cap=" << *opts.cap;
    report.grid = g.str();
  }
  const auto t0 = std::chrono::steady_clock::now();
  run_tasks(tasks, opts, report);
  if (opts.timings)
    report.total_elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count();
  return report;
}

namespace {

std::string params_to_string(const IdentityRecord& r, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) out << sep;
    out << r.params[i].first << "=" << r.params[i].second;
  }
  return out.str();
}

void append_json_escaped(std::ostringstream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << '"';
}

}  // namespace

std::string render_table(const VerificationReport& report) {
  std::size_t id_w = 8, prm_w = 6;
  for (const auto& r : report.records) {
    id_w = std::max(id_w, r.identity.size());
    prm_w = std::max(prm_w, params_to_string(r, ' ').size());
  }
  std::ostringstream out;
  out << "suite: " << report.suite << "   grid: " << report.grid << "\n";
  for (const auto& r : report.records) {
    out << (r.equal ? "ok   " : "FAIL ") << std::left << std::setw(id_w)
        << r.identity << "  " << std::setw(prm_w) << params_to_string(r, ' ')
        << "  lhs=" << to_string(r.lhs) << "  rhs=" << to_string(r.rhs);
    if (report.total_elapsed_ms || r.elapsed_ms)
      out << "  [" << r.elapsed_ms << " ms]";
    out << "\n";
  }
  out << "summary: checked " << report.checked() << ", passed "
      << report.passed() << ", failed " << report.failed();
  if (report.aborted) out << "  [ABORTED: time budget exceeded]";
  out << "\n";
  return out.str();
}

// Keys are emitted in alphabetical order with compact separators, matching
// the canonical form produced by a parse -> serialize round trip.
std::string render_json(const VerificationReport& report) {
  std::ostringstream out;
  out << "{\"aborted\":" << (report.aborted ? "true" : "false") << ",\"grid\":";
  append_json_escaped(out, report.grid);
  out << ",\"records\":[";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    if (i) out << ",";
    out << "{\"elapsed_ms\":" << r.elapsed_ms
        << ",\"equal\":" << (r.equal ? "true" : "false") << ",\"identity\":";
    append_json_escaped(out, r.identity);
    out << ",\"lhs\":";
    append_json_escaped(out, to_string(r.lhs));
    out << ",\"params\":{";
    auto params = r.params;
    std::sort(params.begin(), params.end());
    for (std::size_t j = 0; j < params.size(); ++j) {
      if (j) out << ",";
      append_json_escaped(out, params[j].first);
      out << ":";
      append_json_escaped(out, params[j].second);
    }
    out << "},\"rhs\":";
    append_json_escaped(out, to_string(r.rhs));
    out << "}";
  }
  out << "],\"suite\":";
  append_json_escaped(out, report.suite);
  out << ",\"summary\":{\"checked\":" << report.checked()
      << ",\"failed\":" << report.failed() << ",\"passed\":" << report.passed()
      << "},\"total_elapsed_ms\":" << report.total_elapsed_ms << "}";
  return out.str();
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "identity,params,lhs,rhs,equal,elapsed_ms\n";
  for (const auto& r : report.records)
    out << r.identity << "," << params_to_string(r, ';') << ","
        << to_string(r.lhs) << "," << to_string(r.rhs) << ","
        << (r.equal ? "true" : "false") << "," << r.elapsed_ms << "\n";
  return out.str();
}

}  // namespace ppdet
