#include "jpca/report.hpp"

#include <cmath>
#include <cstdio>

#include "jpca/analysis.hpp"
#include "jpca/density.hpp"
#include "jpca/map_library.hpp"
#include "jpca/sampling.hpp"

namespace jpca {

std::string format_parity(double value, unsigned places) {
  if (value < 0) throw std::invalid_argument("format_parity: value must be nonnegative");
  const double scale = std::pow(10.0, places);
  // nudge by one part in 1e9 so exactly representable boundaries survive
  const double scaled = value * scale;
  double t = std::floor(scaled + scaled * 1e-12 + 1e-9);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, t / scale);
  return buf;
}

std::string format_round(double value, unsigned places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  return buf;
}

std::vector<unsigned> parse_k_range(const std::string& text) {
  std::vector<unsigned> ks;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad k range '" + text + "'");
    for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const unsigned k = static_cast<unsigned>(std::stoul(text.substr(pos, comma - pos)));
    if (k < 1) throw std::invalid_argument("k must be positive");
    ks.push_back(k);
    pos = comma + 1;
  }
  if (ks.empty()) throw std::invalid_argument("empty k list");
  return ks;
}

namespace {

std::string fmt_real(double v, bool parity, unsigned places) {
  if (parity) return format_parity(v, places);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_avg(double v, bool parity) {
  if (parity) return format_round(v, 2);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct TableWriter {
  std::ostream& out;
  OutputFormat format;
  bool header_done = false;

  void header(const std::vector<std::string>& cols) {
    if (header_done) return;
    header_done = true;
    if (format == OutputFormat::csv) {
      for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
      out << "\n";
    } else {
      out << "|";
      for (const auto& c : cols) out << " " << c << " |";
      out << "\n|";
      for (size_t i = 0; i < cols.size(); ++i) out << "---|";
      out << "\n";
    }
  }
  void row(const std::vector<std::string>& cells) {
    if (format == OutputFormat::csv) {
      for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << "\n";
    } else {
      out << "|";
      for (const auto& c : cells) out << " " << c << " |";
      out << "\n";
    }
  }
  void note(const std::string& text) {
    out << (format == OutputFormat::csv ? "# " : "> ") << text << "\n";
  }
};

LocalRule resolve_map(const std::string& name_or_spec) {
  return MapLibrary::instance().resolve_spec(name_or_spec);
}

}  // namespace

int run_fperiod(const RunConfig& config, std::ostream& out) {
  int errors = 0;
  TableWriter w{out, config.format};
  const bool multi = config.maps.size() > 1;
  for (const std::string& name : config.maps) {
    if (multi) w.note("map " + name);
    LocalRule rule = resolve_map(name);
    std::map<unsigned, PeriodStats> by_k;
    for (unsigned k : config.ks) {
      try {
        PeriodStats st = analyze_period_k(rule, k, config.memory_budget);
        if (config.spectrum) {
          if (config.format == OutputFormat::markdown)
            w.header({"k", "p", "μ_orb", "μ_per", "μ_ev"});
          w.header({"k", "p", "mu_orb", "mu_per", "mu_ev"});
          for (const SpectrumRow& row : st.spectrum)
            w.row({std::to_string(k), std::to_string(row.period), std::to_string(row.mu_orb),
                   std::to_string(row.mu_per), std::to_string(row.mu_ev)});
          continue;
        }
        if (config.least) {
          by_k.emplace(k, st);
          for (unsigned d = 1; d < k; ++d)
            if (k % d == 0 && !by_k.count(d))
              by_k.emplace(d, analyze_period_k(rule, d, config.memory_budget));
          const LeastPeriodStats least = least_period_stats(k, by_k);
          w.header({"k", "p_least", "nu_o_k"});
          w.row({std::to_string(k), std::to_string(least.count),
                 fmt_real(least.nu_o_k, config.parity, 2)});
          continue;
        }
        if (config.format == OutputFormat::markdown)
          w.header({"k", "Fraction Periodic", "ν_k", "L^{1/k}", "P", "L", "Not-P",
                    "Average Period", "Average Preperiod", "Maximum Preperiod"});
        w.header({"k", "fraction_periodic", "nu_k", "l_root_k", "p", "l", "not_p",
                  "avg_period", "avg_preperiod", "max_preperiod"});
        const double fraction =
            static_cast<double>(st.periodic_count) / static_cast<double>(st.total);
        w.row({std::to_string(k), fmt_real(fraction, config.parity, 6),
               fmt_real(st.nu_k, config.parity, 2), fmt_real(st.l_root, config.parity, 2),
               std::to_string(st.periodic_count), std::to_string(st.longest_cycle),
               std::to_string(st.not_periodic()), fmt_avg(st.avg_period, config.parity),
               fmt_avg(st.avg_preperiod, config.parity), std::to_string(st.max_preperiod)});
      } catch (const std::exception& e) {
        ++errors;
        w.note("error map=" + name + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  return errors;
}

int run_fdense(const RunConfig& config, std::ostream& out, std::ostream* missing_sidecar) {
  int errors = 0;
  TableWriter w{out, config.format};
  w.header({"map", "m", "k", "dense", "missing_count"});
  for (const std::string& name : config.maps) {
    LocalRule rule = resolve_map(name);
    for (unsigned k : config.ks) {
      try {
        DensityReport r = m_dense_report(rule, k, config.m, config.memory_budget);
        w.row({name, std::to_string(config.m), std::to_string(k), r.dense ? "true" : "false",
               std::to_string(r.missing_count)});
        for (const std::string& pat : r.missing_patterns) {
          if (missing_sidecar)
            *missing_sidecar << name << " m=" << config.m << " k=" << k << " " << pat << "\n";
          else
            w.note("missing " + pat);
        }
      } catch (const std::exception& e) {
        ++errors;
        w.note("error map=" + name + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  return errors;
}

int run_fprobperiod(const RunConfig& config, std::ostream& out) {
  int errors = 0;
  TableWriter w{out, config.format};
  std::vector<std::pair<std::string, SampleReport>> reports;
  for (const std::string& name : config.maps) {
    LocalRule rule = resolve_map(name);
    for (unsigned k : config.ks) {
      try {
        reports.emplace_back(
            name, prob_period_report(rule, k, config.samples, config.seed, config.max_steps));
      } catch (const std::exception& e) {
        ++errors;
        w.note("error map=" + name + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  w.note("periods");
  w.header({"map", "k", "seed", "p", "mu"});
  for (const auto& [name, r] : reports)
    for (const auto& [p, mu] : r.rows)
      w.row({name, std::to_string(r.k), std::to_string(r.seed), std::to_string(p),
             std::to_string(mu)});
  w.note("preperiods");
  for (const auto& [name, r] : reports)
    for (std::uint64_t pre : r.preperiods)
      w.row({name, std::to_string(r.k), std::to_string(r.seed), std::to_string(pre)});
  w.note("summary");
  for (const auto& [name, r] : reports) {
    w.row({name, std::to_string(r.k), std::to_string(r.seed), std::to_string(r.max_period),
           fmt_real(r.l_root, config.parity, 2), std::to_string(r.max_preperiod),
           fmt_real(r.m_root, config.parity, 2)});
    if (r.partial) {
      ++errors;
      w.note("partial: " + std::to_string(r.failed_samples.size()) +
             " samples exceeded the step budget");
    }
  }
  return errors;
}

int run_analyze(const RunConfig& config, std::ostream& out) {
  int errors = 0;
  for (const std::string& name : config.maps) {
    try {
      LocalRule rule = resolve_map(name);
      const ClosingStatus cs = closing_status(rule);
      out << name << ": N=" << rule.alphabet_size() << " window=[" << rule.offset_lo() << ","
          << rule.offset_hi() << "] span=" << rule.span()
          << " surjective=" << (is_surjective(rule) ? "true" : "false")
          << " left_permutative=" << (is_left_permutative(rule) ? "true" : "false")
          << " right_permutative=" << (is_right_permutative(rule) ? "true" : "false")
          << " left_closing=" << (cs.left_closing ? "true" : "false")
          << " right_closing=" << (cs.right_closing ? "true" : "false")
          << " injective=" << (is_injective(rule) ? "true" : "false") << "\n";
    } catch (const std::exception& e) {
      ++errors;
      out << "# error map=" << name << ": " << e.what() << "\n";
    }
  }
  return errors;
}

int run_list_maps(std::ostream& out) {
  for (const MapEntry& e : MapLibrary::instance().entries()) {
    LocalRule r = MapLibrary::instance().resolve(e.name);
    out << e.name << " N=" << r.alphabet_size() << " span=" << r.span() << " window=["
        << r.offset_lo() << "," << r.offset_hi() << "] spec=" << e.spec;
    std::string props;
    auto tag = [&props](const std::optional<bool>& v, const char* name) {
      if (v) props += std::string(props.empty() ? "" : ",") + (*v ? "" : "!") + name;
    };
    tag(e.expected.surjective, "onto");
    tag(e.expected.left_permutative, "lperm");
    tag(e.expected.right_permutative, "rperm");
    tag(e.expected.left_closing, "lclose");
    tag(e.expected.right_closing, "rclose");
    tag(e.expected.injective, "1to1");
    if (!props.empty()) out << " props=" << props;
    if (!e.expected.degree_note.empty()) out << " degree=" << e.expected.degree_note;
    if (!e.doc.empty()) out << "  # " << e.doc;
    out << "\n";
  }
  return 0;
}

}  // namespace jpca
