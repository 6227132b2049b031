#pragma once

// Deterministic serialization: a small JSON value type whose dump() is
// byte-stable (floats printed with 17 significant digits, rationals as
// canonical "p/q" strings, object keys in insertion order), plus the CSV
// writers for traces and eigenvalue tables.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pstwalk/classifier.hpp"
#include "pstwalk/pst.hpp"
#include "pstwalk/spectral.hpp"
#include "pstwalk/walk.hpp"

namespace pstwalk {

std::string fmt_double17(double v);
std::string fmt_rational(const Rat& r);

class Jv {
 public:
  Jv() : kind_(Kind::kNull) {}

  static Jv object() { Jv v; v.kind_ = Kind::kObject; return v; }
  static Jv array() { Jv v; v.kind_ = Kind::kArray; return v; }
  static Jv str(std::string s) { Jv v; v.kind_ = Kind::kString; v.str_ = std::move(s); return v; }
  static Jv num(long n) { Jv v; v.kind_ = Kind::kInt; v.int_ = n; return v; }
  static Jv real(double d) { Jv v; v.kind_ = Kind::kReal; v.real_ = d; return v; }
  static Jv boolean(bool b) { Jv v; v.kind_ = Kind::kBool; v.bool_ = b; return v; }
  static Jv null() { return Jv(); }

  Jv& set(const std::string& key, Jv value);
  Jv& push(Jv value);

  std::string dump() const;

 private:
  enum class Kind { kNull, kBool, kInt, kReal, kString, kArray, kObject };
  Kind kind_;
  bool bool_ = false;
  long int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Jv> items_;
  std::vector<std::pair<std::string, Jv>> fields_;

  void dump_to(std::string& out) const;
};

Jv spec_to_jv(const CirculantSpec& spec);
Jv verdict_to_jv(const PSTVerdict& verdict, const CirculantSpec* spec);
Jv delta_to_jv(const DeltaIntegrality& d);
Jv decomposition_to_jv(const ExponentDecomposition& dec);

// tau,fidelity,phase_re,phase_im — phase columns filled only at hits.
std::string trace_to_csv(const FidelityTrace& trace);

// j,lambda_float,exact_tag,class_id
std::string eigen_table_csv(const CirculantSpec& spec);

// One JSON line per sweep record.
std::string sweep_to_jsonl(const SweepReport& report);
// n,s,valency,case,classified_occurs,classified_tau,searched_occurs,searched_tau,agree
std::string sweep_to_csv(const SweepReport& report);

}  // namespace pstwalk
