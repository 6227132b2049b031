#include "pstwalk/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pstwalk {

std::string fmt_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_rational(const Rat& r) { return r.get_str(); }

Jv& Jv::set(const std::string& key, Jv value) {
  if (kind_ != Kind::kObject) throw std::logic_error("Jv::set on a non-object");
  fields_.emplace_back(key, std::move(value));
  return *this;
}

Jv& Jv::push(Jv value) {
  if (kind_ != Kind::kArray) throw std::logic_error("Jv::push on a non-array");
  items_.push_back(std::move(value));
  return *this;
}

namespace {

void dump_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

}  // namespace

void Jv::dump_to(std::string& out) const {
  switch (kind_) {
    case Kind::kNull: out += "null"; break;
    case Kind::kBool: out += bool_ ? "true" : "false"; break;
    case Kind::kInt: out += std::to_string(int_); break;
    case Kind::kReal: out += fmt_double17(real_); break;
    case Kind::kString: dump_escaped(str_, out); break;
    case Kind::kArray: {
      out.push_back('[');
      for (size_t i = 0; i < items_.size(); ++i) {
        if (i) out.push_back(',');
        items_[i].dump_to(out);
      }
      out.push_back(']');
      break;
    }
    case Kind::kObject: {
      out.push_back('{');
      for (size_t i = 0; i < fields_.size(); ++i) {
        if (i) out.push_back(',');
        dump_escaped(fields_[i].first, out);
        out.push_back(':');
        fields_[i].second.dump_to(out);
      }
      out.push_back('}');
      break;
    }
  }
}

std::string Jv::dump() const {
  std::string out;
  dump_to(out);
  return out;
}

Jv spec_to_jv(const CirculantSpec& spec) {
  Jv j = Jv::object();
  j.set("n", Jv::num(spec.n));
  Jv s = Jv::array();
  for (int r : spec.s) s.push(Jv::num(r));
  j.set("s", std::move(s));
  return j;
}

Jv verdict_to_jv(const PSTVerdict& verdict, const CirculantSpec* spec) {
  Jv j = Jv::object();
  if (spec != nullptr) j.set("spec", spec_to_jv(*spec));
  j.set("occurs", Jv::boolean(verdict.occurs));
  j.set("source", Jv::num(verdict.source));
  j.set("target", verdict.target ? Jv::num(*verdict.target) : Jv::null());
  j.set("tau_min", verdict.tau_min ? Jv::num(*verdict.tau_min) : Jv::null());
  j.set("gamma", verdict.gamma ? Jv::num(*verdict.gamma) : Jv::null());
  if (!verdict.co_targets.empty()) {
    Jv co = Jv::array();
    for (int y : verdict.co_targets) co.push(Jv::num(y));
    j.set("co_targets", std::move(co));
  }
  if (verdict.case_label) j.set("case", Jv::str(*verdict.case_label));
  Jv ev = Jv::array();
  for (const EvidenceItem& item : verdict.evidence) {
    Jv e = Jv::object();
    e.set("criterion", Jv::str(item.criterion));
    e.set("pass", Jv::boolean(item.pass));
    e.set("details", Jv::str(item.details));
    ev.push(std::move(e));
  }
  j.set("evidence", std::move(ev));
  return j;
}

Jv delta_to_jv(const DeltaIntegrality& d) {
  Jv j = Jv::object();
  j.set("l", Jv::num(d.l));
  j.set("a", Jv::num(d.a));
  j.set("b", Jv::num(d.b));
  j.set("delta", Jv::str(d.delta.to_string()));
  j.set("working_conductor", Jv::num(d.working_conductor));
  j.set("reduced_delta", Jv::str(d.reduced_delta.to_string()));
  Jv exps = Jv::array();
  for (long e : d.basis.exponents) exps.push(Jv::num(e));
  j.set("basis_exponents", std::move(exps));
  Jv coords = Jv::array();
  for (const Rat& c : d.coordinates) coords.push(Jv::str(fmt_rational(c)));
  j.set("coordinates", std::move(coords));
  j.set("algebraic_integer", Jv::boolean(d.integral));
  return j;
}

Jv decomposition_to_jv(const ExponentDecomposition& dec) {
  Jv j = Jv::object();
  j.set("n", Jv::num(dec.n));
  j.set("x", Jv::num(dec.exponent));
  Jv parts = Jv::array();
  for (const PrimeComponent& part : dec.parts) {
    Jv p = Jv::object();
    p.set("p", Jv::num(part.p));
    p.set("f", Jv::num(part.f));
    p.set("component", Jv::num(part.component));
    p.set("pi", part.pi ? Jv::num(*part.pi) : Jv::null());
    p.set("theta", part.theta ? Jv::num(*part.theta) : Jv::null());
    parts.push(std::move(p));
  }
  j.set("parts", std::move(parts));
  return j;
}

std::string trace_to_csv(const FidelityTrace& trace) {
  std::ostringstream os;
  os << "tau,fidelity,phase_re,phase_im\n";
  size_t hit = 0;
  for (size_t i = 0; i < trace.times.size(); ++i) {
    os << trace.times[i] << "," << fmt_double17(trace.fidelities[i]);
    if (hit < trace.hits.size() && trace.hits[hit].tau == trace.times[i]) {
      os << "," << fmt_double17(trace.hits[hit].phase.real()) << ","
         << fmt_double17(trace.hits[hit].phase.imag());
      ++hit;
    } else {
      os << ",,";
    }
    os << "\n";
  }
  return os.str();
}

std::string eigen_table_csv(const CirculantSpec& spec) {
  const SpectralDecomposition dec = decompose(spec);
  std::vector<int> class_of(spec.n, -1);
  for (size_t c = 0; c < dec.classes.size(); ++c) {
    for (int j : dec.classes[c].indices) class_of[j] = static_cast<int>(c);
  }
  const auto evals = circulant_eigenvalues(spec);
  std::ostringstream os;
  os << "j,lambda_float,exact_tag,class_id\n";
  for (int j = 0; j < spec.n; ++j) {
    os << j << "," << fmt_double17(evals[j].second) << ",\"" << evals[j].first.to_string()
       << "\"," << class_of[j] << "\n";
  }
  return os.str();
}

std::string sweep_to_jsonl(const SweepReport& report) {
  std::string out;
  for (const SweepRecord& rec : report.records) {
    Jv j = Jv::object();
    j.set("spec", spec_to_jv(rec.spec));
    j.set("classified", verdict_to_jv(rec.classified, nullptr));
    j.set("searched", verdict_to_jv(rec.searched, nullptr));
    j.set("agree", Jv::boolean(rec.agree));
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "n,s,valency,case,classified_occurs,classified_tau,searched_occurs,searched_tau,agree\n";
  for (const SweepRecord& rec : report.records) {
    os << rec.spec.n << ",\"";
    for (size_t i = 0; i < rec.spec.s.size(); ++i) os << (i ? " " : "") << rec.spec.s[i];
    os << "\"," << rec.spec.valency() << "," << rec.classified.case_label.value_or("") << ","
       << (rec.classified.occurs ? 1 : 0) << ","
       << (rec.classified.tau_min ? std::to_string(*rec.classified.tau_min) : "") << ","
       << (rec.searched.occurs ? 1 : 0) << ","
       << (rec.searched.tau_min ? std::to_string(*rec.searched.tau_min) : "") << ","
       << (rec.agree ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace pstwalk
