#include <doctest.h>

#include <cmath>
#include <random>

#include "th/constants.hpp"
#include "th/errors.hpp"
#include "th/model.hpp"

using namespace th;
using model::MoleculeParams;

namespace {

MoleculeParams synth(double D, double mu, double bh, double re, double ch) {
  return {"synth", D, re, bh, ch, mu};
}

}  // namespace

TEST_CASE("scale: conversion constant against an independent derivation") {
  // hbar^2/(2 amu) in cm^-1 A^2, computed separately from CODATA 2018
  // (hbar = h/2pi, E(cm^-1) = h c * 100): 16.857629191640176.
  auto sp = model::scale(synth(1000.0, 1.0, 1.0, 1.0, 0.1));
  CHECK(sp.conv == doctest::Approx(16.857629191640176).epsilon(1e-6));
  CHECK(sp.conv == doctest::Approx(16.857629191640176).epsilon(1e-12));
}

TEST_CASE("scale: proportionalities and round trips") {
  auto sp1 = model::scale(synth(1000.0, 1.0, 1.0, 1.0, 0.1));
  auto sp2 = model::scale(synth(1000.0, 2.0, 1.0, 1.0, 0.1));
  CHECK(sp2.conv == doctest::Approx(sp1.conv / 2.0).epsilon(1e-15));

  // D = d_tilde * conv round trip
  CHECK(sp1.d_tilde * sp1.conv == doctest::Approx(1000.0).epsilon(1e-12));

  // d_tilde(D = conv) = 1
  auto sp3 = model::scale(synth(sp1.conv, 1.0, 1.0, 1.0, 0.1));
  CHECK(sp3.d_tilde == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("scale_energy: linearity anchors") {
  auto sp = model::scale(synth(4000.0, 1.3, 2.0, 1.0, 0.2));
  CHECK(model::scale_energy(sp, 0.0) == 0.0);
  CHECK(model::scale_energy(sp, 4000.0) == doctest::Approx(sp.d_tilde).epsilon(1e-14));
  CHECK(model::scale_energy(sp, 2000.0) ==
        doctest::Approx(sp.d_tilde / 2.0).epsilon(1e-14));
}

TEST_CASE("validate: rejects bad parameters") {
  CHECK_THROWS_AS(model::validate(synth(-1.0, 1.0, 1.0, 1.0, 0.1)), DomainError);
  CHECK_THROWS_AS(model::validate(synth(1.0, -1.0, 1.0, 1.0, 0.1)), DomainError);
  CHECK_THROWS_AS(model::validate(synth(1.0, 1.0, 0.0, 1.0, 0.1)), DomainError);
  CHECK_THROWS_AS(model::validate(synth(1.0, 1.0, 1.0, -2.0, 0.1)), DomainError);
  CHECK_THROWS_AS(model::validate(synth(1.0, 1.0, 1.0, 1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(model::validate(synth(1.0, 1.0, 1.0, 1.0, -1.3)), DomainError);
  CHECK_NOTHROW(model::validate(synth(1.0, 1.0, 1.0, 1.0, 0.999)));
}

TEST_CASE("potential_th: anchors") {
  auto p = synth(40000.0, 1.0, 2.0, 1.0, 0.3);
  CHECK(model::potential_th(p, p.r_e) == 0.0);
  // asymptote
  double far = p.r_e + 100.0 / p.b_h;
  CHECK(model::potential_th(p, far) == doctest::Approx(p.D).epsilon(1e-8));
  CHECK_THROWS_AS(model::potential_th(p, 0.0), DomainError);
  CHECK_THROWS_AS(model::potential_th(p, -1.0), DomainError);
}

TEST_CASE("potential_th: c_h = 0 collapses onto the Morse potential") {
  auto p = synth(40000.0, 1.0, 2.0, 1.0, 0.0);
  for (int i = 0; i < 50; ++i) {
    double r = 0.2 + i * 0.25;
    double vth = model::potential_th(p, r);
    double vm = model::potential_morse(p.D, p.b_h, p.r_e, r);
    CHECK(std::fabs(vth - vm) <= 1e-14 * std::max(1.0, std::fabs(vm)));
  }
}

TEST_CASE("potential_th: singularity guard at r0") {
  auto p = synth(40000.0, 1.0, 2.0, 1.0, 0.3);
  double r0 = p.r_e + std::log(p.c_h) / p.b_h;
  CHECK_THROWS_AS(model::potential_th(p, r0), SingularityError);
  CHECK_THROWS_AS(model::potential_th(p, r0 + 0.9e-12), SingularityError);
  CHECK_NOTHROW(model::potential_th(p, r0 + 1e-9));
  CHECK_NOTHROW(model::potential_th(p, r0 - 1e-9));
}

TEST_CASE("potential_th: diverges monotonically approaching r0 from the right") {
  auto p = synth(40000.0, 1.0, 2.0, 1.0, 0.3);
  double r0 = p.r_e + std::log(p.c_h) / p.b_h;
  double prev = model::potential_th(p, p.r_e - 1e-4);
  for (double f = 0.25; f > 1e-6; f *= 0.5) {
    double v = model::potential_th(p, r0 + f * (p.r_e - r0));
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 1e8);
}

TEST_CASE("potential_morse: anchors") {
  double D = 5000.0, beta = 1.7, re = 1.1;
  CHECK(model::potential_morse(D, beta, re, re) == 0.0);
  CHECK(model::potential_morse(D, beta, re, re + 100.0 / beta) ==
        doctest::Approx(D).epsilon(1e-8));
  CHECK(model::potential_morse(D, beta, re, re + std::log(2.0) / beta) ==
        doctest::Approx(D / 4.0).epsilon(1e-13));
}

TEST_CASE("morse_beta") {
  CHECK(model::morse_beta(1.7, 0.0) == 1.7);
  CHECK(model::morse_beta(1.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  double bh = 2.31, ch = -0.42;
  CHECK(model::morse_beta(bh, ch) * (1.0 - ch) == doctest::Approx(bh).epsilon(1e-15));
  CHECK_THROWS_AS(model::morse_beta(1.0, 1.0), DomainError);
}

TEST_CASE("classify_regime: representative molecules") {
  // HF shape, c_h above its threshold 0.16849...
  auto hf = synth(1.0, 1.0, 1.94207, 0.917, 0.2);
  auto r = model::classify_regime(hf);
  CHECK(r.case_id == model::CaseId::I);
  REQUIRE(r.r0.has_value());
  CHECK(*r.r0 == doctest::Approx(0.917 + std::log(0.2) / 1.94207).epsilon(1e-14));
  CHECK(r.domain_lo == *r.r0);
  CHECK(std::isinf(r.domain_hi));

  // H2 shape: threshold 0.3013... so c_h = 0.2 sits below it
  auto h2 = synth(1.0, 1.0, 1.61890, 0.741, 0.2);
  r = model::classify_regime(h2);
  CHECK(r.case_id == model::CaseId::III);
  CHECK(r.domain_lo == 0.0);
  REQUIRE(r.r0.has_value());
  CHECK(*r.r0 < 0.0);

  r = model::classify_regime(synth(1.0, 1.0, 1.61890, 0.741, -0.3));
  CHECK(r.case_id == model::CaseId::IV);
  CHECK(!r.r0.has_value());

  r = model::classify_regime(synth(1.0, 1.0, 1.61890, 0.741, 0.0));
  CHECK(r.case_id == model::CaseId::V);
}

TEST_CASE("classify_regime: case V tolerance band and case I boundary") {
  CHECK(model::classify_regime(synth(1.0, 1.0, 2.0, 1.0, 5e-13)).case_id ==
        model::CaseId::V);
  CHECK(model::classify_regime(synth(1.0, 1.0, 2.0, 1.0, -5e-13)).case_id ==
        model::CaseId::V);
  CHECK(model::classify_regime(synth(1.0, 1.0, 2.0, 1.0, 2e-12)).case_id ==
        model::CaseId::III);
  // c_h exactly at the threshold belongs to case I
  double thr = std::exp(-2.0 * 1.0);
  auto r = model::classify_regime(synth(1.0, 1.0, 2.0, 1.0, thr));
  CHECK(r.case_id == model::CaseId::I);
  CHECK(*r.r0 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classify_regime: partitions the parameter space") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ubh(0.5, 3.0), ure(0.5, 3.0),
      uch(-0.999, 0.999);
  for (int i = 0; i < 2000; ++i) {
    auto p = synth(1.0, 1.0, ubh(rng), ure(rng), uch(rng));
    auto r = model::classify_regime(p);
    double thr = model::threshold_ch(p);
    CHECK(r.threshold == doctest::Approx(thr).epsilon(1e-15));
    switch (r.case_id) {
      case model::CaseId::I:
        CHECK(p.c_h >= thr);
        CHECK(r.r0.has_value());
        break;
      case model::CaseId::III:
        CHECK(p.c_h > 0.0);
        CHECK(p.c_h < thr);
        break;
      case model::CaseId::IV:
        CHECK(p.c_h < 0.0);
        break;
      case model::CaseId::V:
        CHECK(std::fabs(p.c_h) < model::kCaseVTol);
        break;
      default:
        FAIL("classify_regime produced case II");
    }
    CHECK(r.r0.has_value() == (p.c_h > 0.0 && r.case_id != model::CaseId::V));
  }
}

TEST_CASE("threshold_ch: reference table to 1e-8") {
  struct Row {
    const char* name;
    double bh, re, want;
  };
  const Row rows[] = {
      {"HF", 1.94207, 0.917, 0.168490115},  {"N2", 2.78585, 1.097, 0.047071975},
      {"I2", 2.12343, 2.666, 0.003478812},  {"H2", 1.61890, 0.741, 0.301313237},
      {"O2", 2.59103, 1.207, 0.043832785},  {"O2+", 2.86987, 1.116, 0.040649248},
  };
  for (const auto& row : rows) {
    auto p = synth(1.0, 1.0, row.bh, row.re, 0.0);
    CHECK(std::fabs(model::threshold_ch(p) - row.want) <= 1e-8);
  }
}
