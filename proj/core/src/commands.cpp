#include "th/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "th/errors.hpp"

namespace th::cli {
namespace {

constexpr double kTable1Tol = 1e-8;

struct ShapeRef {
  const char* name;
  double b_h, r_e, ch_min;
};

// Shape parameters and minimal-c_h reference column for the six stock
// diatomics.
constexpr ShapeRef kShapes[] = {
    {"HF", 1.94207, 0.917, 0.168490115},
    {"N2", 2.78585, 1.097, 0.047071975},
    {"I2", 2.12343, 2.666, 0.003478812},
    {"H2", 1.61890, 0.741, 0.301313237},
    {"O2", 2.59103, 1.207, 0.043832785},
    {"O2+", 2.86987, 1.116, 0.040649248},
};

}  // namespace

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

const std::vector<catalog::CatalogEntry>& builtin_shapes() {
  static const std::vector<catalog::CatalogEntry> entries = [] {
    std::vector<catalog::CatalogEntry> v;
    for (const auto& s : kShapes) {
      catalog::CatalogEntry e;
      e.name = s.name;
      e.b_h = s.b_h;
      e.r_e = s.r_e;
      v.push_back(e);
    }
    return v;
  }();
  return entries;
}

Table1Result cmd_table1() {
  Table1Result out;
  std::ostringstream os;
  os << "molecule\tbh_invA\tre_A\tch_min\n";
  out.ok = true;
  for (const auto& s : kShapes) {
    model::MoleculeParams p{s.name, 1.0, s.r_e, s.b_h, 0.0, 1.0};
    double thr = model::threshold_ch(p);
    out.rows.push_back({s.name, s.b_h, s.r_e, thr, s.ch_min});
    if (std::fabs(thr - s.ch_min) > kTable1Tol) out.ok = false;
    os << s.name << '\t' << format_sci(s.b_h) << '\t' << format_sci(s.r_e)
       << '\t' << format_sci(thr) << '\n';
  }
  out.text = os.str();
  return out;
}

std::string cmd_classify(const catalog::CatalogEntry& entry,
                         std::optional<double> ch_override) {
  auto ch = ch_override ? ch_override : entry.c_h;
  if (!ch)
    throw DomainError("molecule '" + entry.name +
                      "' has no ch; supply --ch to classify");
  if (!entry.r_e || !entry.b_h)
    throw DomainError("molecule '" + entry.name + "' lacks shape parameters");
  model::MoleculeParams p{entry.name, entry.D.value_or(1.0), *entry.r_e,
                          *entry.b_h, *ch, entry.mu.value_or(1.0)};
  auto regime = model::classify_regime(p);
  std::ostringstream os;
  os << entry.name << '\t' << model::to_string(regime.case_id) << '\t'
     << format_sci(regime.threshold) << '\t'
     << (regime.r0 ? format_sci(*regime.r0) : "-") << '\t'
     << (regime.case_id == model::CaseId::I ? "companion case II on (0, r0) unsolved"
                                            : "-")
     << '\n';
  return os.str();
}

SpectrumOutput cmd_spectrum(const model::MoleculeParams& params, bool validate) {
  spectrum::SolveOptions opts;
  opts.validate_with_oracle = validate;
  SpectrumOutput out{spectrum::solve(params, opts), {}};
  std::ostringstream os;
  os << "n_r\tE_cm1\tmethod";
  if (validate) os << "\toracle_E_cm1\trel_dev";
  os << '\n';
  const auto& rep = out.report;
  for (size_t i = 0; i < rep.states.size(); ++i) {
    const auto& st = rep.states[i];
    os << st.n_r << '\t' << format_sci(st.E) << '\t' << to_string(st.method);
    if (validate && rep.oracle && i < rep.oracle->energies.size())
      os << '\t' << format_sci(rep.oracle->energies[i]) << '\t'
         << format_sci(rep.oracle->rel_dev[i]);
    os << '\n';
  }
  out.tsv = os.str();
  return out;
}

std::string cmd_curve(const model::MoleculeParams& params, CurveKind kind,
                      std::optional<int> n_r, std::optional<double> energy,
                      double r_lo, double r_hi, int samples) {
  if (!(r_lo < r_hi) || samples < 2)
    throw DomainError("cmd_curve: need r_lo < r_hi and samples >= 2");
  auto regime = model::classify_regime(params);

  std::function<double(double)> eval;
  if (kind == CurveKind::potential) {
    eval = [&params](double r) { return model::potential_th(params, r); };
  } else {
    switch (regime.case_id) {
      case model::CaseId::I: {
        if (!n_r) throw DomainError("cmd_curve: case I wavefunctions take --n");
        int n = *n_r;
        eval = [&params, n](double r) {
          return spectrum::wavefunction_case_i(params, n, r);
        };
        break;
      }
      case model::CaseId::V: {
        if (!n_r) throw DomainError("cmd_curve: case V wavefunctions take --n");
        int n = *n_r;
        eval = [&params, n](double r) {
          return spectrum::wavefunction_morse(params, n, r);
        };
        break;
      }
      case model::CaseId::III:
      case model::CaseId::IV: {
        double E;
        if (energy) {
          E = *energy;
        } else if (n_r) {
          auto rep = spectrum::solve(params);
          if (*n_r < 0 || *n_r >= static_cast<int>(rep.states.size()))
            throw DomainError("cmd_curve: n_r outside the computed spectrum");
          E = rep.states[*n_r].E;
        } else {
          throw DomainError("cmd_curve: transcendental regimes take --n or --energy");
        }
        bool iii = regime.case_id == model::CaseId::III;
        eval = [&params, E, iii](double r) {
          return iii ? spectrum::wavefunction_case_iii(params, E, r)
                     : spectrum::wavefunction_case_iv(params, E, r);
        };
        break;
      }
      default:
        throw DomainError("cmd_curve: unsupported regime");
    }
  }

  std::ostringstream os;
  os << "r_A,value\n";
  for (int i = 0; i < samples; ++i) {
    double r = r_lo + (r_hi - r_lo) * i / (samples - 1);
    os << format_sci(r) << ',' << format_sci(eval(r)) << '\n';
  }
  return os.str();
}

}  // namespace th::cli
