// dio: exact-arithmetic command line for rational points on conics and
// cubics, etale checks over localized rings, and p-adic analysis.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dio/conic.hpp"
#include "dio/cubic.hpp"
#include "dio/equation.hpp"
#include "dio/etale.hpp"
#include "dio/padic.hpp"
#include "dio/roots.hpp"
#include "dio/weierstrass.hpp"

using json = nlohmann::ordered_json;
using namespace dio;

namespace {

// bad argument values are usage errors (exit 2), not domain errors
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& w) : std::runtime_error(w) {}
};

Rational arg_rational(const std::string& s) {
  try {
    return Rational::from_string(s);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
}

std::vector<Rational> arg_rational_list(const std::string& s) {
  std::vector<Rational> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    out.push_back(arg_rational(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RatPoint arg_point(const std::string& s) {
  auto v = arg_rational_list(s);
  if (v.size() != 2) throw usage_error("expected a point as x,y");
  return {v[0], v[1]};
}

CurvePoint arg_curve_point(const std::string& s) {
  if (s == "O" || s == "o") return CurvePoint::O();
  RatPoint p = arg_point(s);
  return CurvePoint::affine(p.x, p.y);
}

WeierstrassCurve arg_curve(const std::string& s) {
  auto v = arg_rational_list(s);
  if (v.size() != 2) throw usage_error("expected a curve as a,b for y^2 = x^3 + a*x + b");
  return WeierstrassCurve(v[0], v[1]);
}

Slope arg_slope(const std::string& s) {
  if (s == "vert" || s == "vertical" || s == "inf") return Slope::vertical();
  return Slope::finite(arg_rational(s));
}

long arg_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw usage_error(std::string("malformed ") + what);
    return v;
  } catch (const usage_error&) {
    throw;
  } catch (const std::exception&) {
    throw usage_error(std::string("malformed ") + what);
  }
}

json point_json(const CurvePoint& p) {
  if (p.identity) return json("O");
  return json{{"x", p.x.to_string()}, {"y", p.y.to_string()}};
}

json padic_json(const PadicNumber& v) {
  return json{{"rep", v.rep_string()}, {"p", v.prime()}, {"prec", v.precision()}};
}

std::string curve_point_text(const CurvePoint& p) {
  if (p.identity) return "O";
  return p.x.to_string() + ", " + p.y.to_string();
}

struct Outcome {
  json payload;
  std::string text;
};

Equation equation_from_flags(const std::string& eq_text, const std::string& file) {
  if (!eq_text.empty() && !file.empty())
    throw usage_error("give --eq or --file, not both");
  if (!eq_text.empty()) return parse_equation(eq_text);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw usage_error("cannot open file: " + file);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    return parse_equation(body);
  }
  throw usage_error("an equation is required (--eq or --file)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-point toolkit: conics, cubics, etale checks, p-adic analysis"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  Outcome outcome;
  std::string command;

  auto finish = [&](json payload, std::string text) {
    outcome = {std::move(payload), std::move(text)};
  };

  // --- parser module ------------------------------------------------------
  std::string f_eq, f_file, f_point, f_ring, f_poly, f_word, f_coeffs, f_u, f_z;
  std::string f_base, f_slope, f_c, f_p, f_q, f_curve, f_n;
  std::string f_bound, f_steps, f_prime, f_prec, f_depth;
  std::vector<std::string> f_maps;

  auto* c_parse = app.add_subcommand("parse", "parse an equation to canonical form");
  c_parse->add_option("--eq", f_eq, "equation text");
  c_parse->add_option("--file", f_file, "read the equation from a file");
  c_parse->callback([&] {
    Equation eq = equation_from_flags(f_eq, f_file);
    json vars = json::array();
    for (const auto& v : eq.variables) vars.push_back(v);
    finish(json{{"lhs", eq.lhs.to_string()}, {"variables", vars}, {"degree", eq.degree()}},
           eq.lhs.to_string() + " = 0");
  });

  auto* c_check = app.add_subcommand("check-point", "is a tuple a solution?");
  c_check->add_option("--eq", f_eq);
  c_check->add_option("--file", f_file);
  c_check->add_option("--point", f_point, "coordinates, matched to the sorted variables")
      ->required();
  c_check->callback([&] {
    Equation eq = equation_from_flags(f_eq, f_file);
    auto coords = arg_rational_list(f_point);
    if (coords.size() != eq.variables.size())
      throw usage_error("expected " + std::to_string(eq.variables.size()) + " coordinates");
    std::map<std::string, Rational> asg;
    for (size_t i = 0; i < coords.size(); ++i) asg[eq.variables[i]] = coords[i];
    bool ok = is_point(eq, asg);
    finish(json{{"is_point", ok}}, ok ? "true" : "false");
  });

  auto* c_search = app.add_subcommand("search", "integer solutions in a box");
  c_search->add_option("--eq", f_eq);
  c_search->add_option("--file", f_file);
  c_search->add_option("--bound", f_bound)->required();
  c_search->callback([&] {
    Equation eq = equation_from_flags(f_eq, f_file);
    auto pts = search_integer_points(eq, Integer(arg_long(f_bound, "bound")));
    json arr = json::array();
    std::string text;
    for (const auto& pt : pts) {
      json row = json::array();
      std::string line;
      for (const auto& c : pt) {
        row.push_back(c.get_str());
        line += (line.empty() ? "" : ",") + c.get_str();
      }
      arr.push_back(row);
      text += "(" + line + ")\n";
    }
    if (text.empty()) text = "(none)";
    else text.pop_back();
    finish(json{{"points", arr}}, text);
  });

  // --- conic module -------------------------------------------------------
  auto* c_sweep = app.add_subcommand("conic-sweep", "second intersection of a rational line");
  c_sweep->add_option("--eq", f_eq)->required();
  c_sweep->add_option("--base", f_base)->required();
  c_sweep->add_option("--slope", f_slope, "rational slope, or vert")->required();
  c_sweep->callback([&] {
    Conic conic = Conic::from_equation(parse_equation(f_eq));
    RatPoint r = sweep(conic, arg_point(f_base), arg_slope(f_slope));
    finish(json{{"x", r.x.to_string()}, {"y", r.y.to_string()}},
           r.x.to_string() + ", " + r.y.to_string());
  });

  auto* c_triples = app.add_subcommand("triples", "Pythagorean triple from a slope");
  c_triples->add_option("--slope", f_slope)->required();
  c_triples->callback([&] {
    auto t = pythagorean_triple(arg_rational(f_slope));
    finish(json{{"triple", {t[0].get_str(), t[1].get_str(), t[2].get_str()}}},
           t[0].get_str() + " " + t[1].get_str() + " " + t[2].get_str());
  });

  // --- cubic module -------------------------------------------------------
  auto* c_tan = app.add_subcommand("cubic-tangent", "tangent step on x^3 + y^3 = c");
  c_tan->add_option("--c", f_c)->required();
  c_tan->add_option("--point", f_point)->required();
  c_tan->callback([&] {
    DiagonalCubic curve(arg_rational(f_c));
    RatPoint P = arg_point(f_point);
    TangentLine line = tangent_line(curve, P);
    RatPoint r = tangent_step(curve, P);
    auto offset = [](const Rational& v) {
      return v.sign() < 0 ? "+" + (-v).to_string() : "-" + v.to_string();
    };
    std::string line_text = line.A.get_str() + "*(x" + offset(P.x) + ")+" + line.B.get_str() +
                            "*(y" + offset(P.y) + ")=0";
    finish(json{{"x", r.x.to_string()}, {"y", r.y.to_string()}},
           "tangent: " + line_text + "\nthird point: " + r.x.to_string() + ", " +
               r.y.to_string());
  });

  auto* c_sec = app.add_subcommand("cubic-secant", "secant step on x^3 + y^3 = c");
  c_sec->add_option("--c", f_c)->required();
  c_sec->add_option("--p", f_p)->required();
  c_sec->add_option("--q", f_q)->required();
  c_sec->callback([&] {
    DiagonalCubic curve(arg_rational(f_c));
    RatPoint r = secant_step(curve, arg_point(f_p), arg_point(f_q));
    finish(json{{"x", r.x.to_string()}, {"y", r.y.to_string()}},
           r.x.to_string() + ", " + r.y.to_string());
  });

  auto* c_iter = app.add_subcommand("cubic-iterate", "iterate the tangent construction");
  c_iter->add_option("--c", f_c)->required();
  c_iter->add_option("--point", f_point)->required();
  c_iter->add_option("--steps", f_steps)->required();
  c_iter->callback([&] {
    DiagonalCubic curve(arg_rational(f_c));
    RatPoint P = arg_point(f_point);
    long steps = arg_long(f_steps, "steps");
    if (steps < 1) throw usage_error("steps must be >= 1");
    json arr = json::array();
    std::string text;
    for (long k = 1; k <= steps; ++k) {
      P = tangent_step(curve, P);
      json entry{{"point", {{"x", P.x.to_string()}, {"y", P.y.to_string()}}}};
      text += "step " + std::to_string(k) + ": " + P.x.to_string() + ", " + P.y.to_string();
      try {
        auto [w, img] = to_weierstrass(curve, P);
        entry["weierstrass"] = {{"u", img.x.to_string()}, {"v", img.y.to_string()}};
        NagellLutzVerdict v = nagell_lutz_test(w, img);
        entry["verdict"] =
            v.torsion ? "torsion of order " + std::to_string(v.order) : "non-torsion: " + v.certificate;
      } catch (const domain_error& e) {
        entry["verdict"] = std::string("not testable: ") + e.what();
      }
      text += "\n  " + entry["verdict"].get<std::string>() + "\n";
      arr.push_back(std::move(entry));
    }
    text.pop_back();
    finish(json{{"iterates", arr}}, text);
  });

  auto* c_wmap = app.add_subcommand("weierstrass-map", "map x^3+y^3=c to v^2 = u^3 - 432c^2");
  c_wmap->add_option("--c", f_c)->required();
  c_wmap->add_option("--point", f_point)->required();
  c_wmap->callback([&] {
    DiagonalCubic curve(arg_rational(f_c));
    auto [w, img] = to_weierstrass(curve, arg_point(f_point));
    finish(json{{"curve", {{"a", w.a.to_string()}, {"b", w.b.to_string()}}},
                {"u", img.x.to_string()},
                {"v", img.y.to_string()}},
           "curve: y^2 = x^3 + (" + w.a.to_string() + ")x + (" + w.b.to_string() + ")\npoint: " +
               img.x.to_string() + ", " + img.y.to_string());
  });

  auto* c_add = app.add_subcommand("ec-add", "group law on y^2 = x^3 + ax + b");
  c_add->add_option("--curve", f_curve)->required();
  c_add->add_option("--p", f_p)->required();
  c_add->add_option("--q", f_q)->required();
  c_add->callback([&] {
    WeierstrassCurve curve = arg_curve(f_curve);
    CurvePoint r = add(curve, arg_curve_point(f_p), arg_curve_point(f_q));
    finish(json{{"point", point_json(r)}}, curve_point_text(r));
  });

  auto* c_mul = app.add_subcommand("ec-mul", "scalar multiple [n]P");
  c_mul->add_option("--curve", f_curve)->required();
  c_mul->add_option("--n", f_n)->required();
  c_mul->add_option("--point", f_point)->required();
  c_mul->callback([&] {
    WeierstrassCurve curve = arg_curve(f_curve);
    CurvePoint r = multiply(curve, Integer(arg_long(f_n, "n")), arg_curve_point(f_point));
    finish(json{{"point", point_json(r)}}, curve_point_text(r));
  });

  auto* c_tt = app.add_subcommand("torsion-test", "Nagell-Lutz classification of a point");
  c_tt->add_option("--curve", f_curve)->required();
  c_tt->add_option("--point", f_point)->required();
  c_tt->callback([&] {
    WeierstrassCurve curve = arg_curve(f_curve);
    NagellLutzVerdict v = nagell_lutz_test(curve, arg_curve_point(f_point));
    if (v.torsion)
      finish(json{{"torsion", true}, {"order", v.order}},
             "torsion of order " + std::to_string(v.order));
    else
      finish(json{{"torsion", false}, {"certificate", v.certificate}},
             "non-torsion: " + v.certificate);
  });

  auto* c_ts = app.add_subcommand("torsion-subgroup", "all rational torsion points");
  c_ts->add_option("--curve", f_curve)->required();
  c_ts->callback([&] {
    WeierstrassCurve curve = arg_curve(f_curve);
    auto pts = torsion_subgroup(curve);
    json arr = json::array();
    std::string text;
    for (const auto& P : pts) {
      arr.push_back(point_json(P));
      text += curve_point_text(P) + "\n";
    }
    text.pop_back();
    finish(json{{"order", pts.size()}, {"points", arr}}, text);
  });

  auto* c_div = app.add_subcommand("divide", "rational points Q with [n]Q = P");
  c_div->add_option("--curve", f_curve)->required();
  c_div->add_option("--point", f_point)->required();
  c_div->add_option("--n", f_n)->required();
  c_div->callback([&] {
    WeierstrassCurve curve = arg_curve(f_curve);
    auto pts = division_preimages(curve, arg_curve_point(f_point),
                                  static_cast<int>(arg_long(f_n, "n")));
    json arr = json::array();
    std::string text;
    for (const auto& P : pts) {
      arr.push_back(point_json(P));
      text += curve_point_text(P) + "\n";
    }
    if (text.empty()) text = "(none)";
    else text.pop_back();
    finish(json{{"preimages", arr}}, text);
  });

  // --- etale module -------------------------------------------------------
  auto* c_et = app.add_subcommand("etale-check", "unit-discriminant criterion");
  c_et->add_option("--ring", f_ring, "Q, Z[1/N], F_p, Q[t], Q[t,1/g]")->required();
  c_et->add_option("--poly", f_poly, "monic polynomial in x (coefficients may involve t)")
      ->required();
  c_et->callback([&] {
    EtaleResult r = is_etale(candidate_from_text(f_ring, f_poly));
    json payload{{"etale", r.etale}, {"discriminant", ring_element_to_string(r.disc)}};
    std::string text = std::string(r.etale ? "etale" : "not etale") +
                       " (disc = " + ring_element_to_string(r.disc) + ")";
    if (r.witness) {
      payload["witness"] = ring_element_to_string(*r.witness);
      text += "; witness: " + ring_element_to_string(*r.witness);
    }
    finish(payload, text);
  });

  auto* c_fib = app.add_subcommand("fiber", "geometric points of the fiber over p");
  c_fib->add_option("--poly", f_poly)->required();
  c_fib->add_option("--prime", f_prime)->required();
  c_fib->callback([&] {
    UniPoly f = to_unipoly(parse_polynomial(f_poly), "x");
    long n = geometric_fiber_count(f, Integer(arg_long(f_prime, "prime")));
    finish(json{{"count", n}}, std::to_string(n));
  });

  auto* c_cov = app.add_subcommand("cover-check", "is a family of maps an open covering?");
  c_cov->add_option("--map", f_maps, "candidate as poly,N (repeatable)")->required();
  c_cov->callback([&] {
    std::vector<std::pair<UniPoly, Integer>> cands;
    for (const std::string& m : f_maps) {
      size_t comma = m.rfind(',');
      if (comma == std::string::npos) throw usage_error("--map wants poly,N");
      std::string ns = m.substr(comma + 1);
      if (ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error("--map wants poly,N with N a positive integer");
      cands.emplace_back(to_unipoly(parse_polynomial(m.substr(0, comma)), "x"), Integer(ns));
    }
    CoverReport rep = covers_spec_z(cands);
    json arr = json::array();
    std::string text;
    for (const auto& c : rep.candidates) {
      json inv = json::array(), ram = json::array();
      for (const auto& p : c.inverted_primes) inv.push_back(p.get_str());
      for (const auto& p : c.ramified_primes) ram.push_back(p.get_str());
      arr.push_back(json{{"poly", poly_to_string(c.f, "x")},
                         {"inverted_n", c.inverted.get_str()},
                         {"etale", c.etale},
                         {"disc", c.disc.get_str()},
                         {"inverted_primes", inv},
                         {"ramified_primes", ram}});
      text += poly_to_string(c.f, "x") + " over Z[1/" + c.inverted.get_str() + "]: " +
              (c.etale ? "etale" : "not etale") + ", disc " + c.disc.get_str() + "\n";
    }
    json payload{{"covers", rep.covers}, {"candidates", arr}};
    text += rep.covers ? "covers Spec(Z)" : "does not cover Spec(Z)";
    if (rep.uncovered_prime) {
      payload["uncovered_prime"] = rep.uncovered_prime->get_str();
      text += " (prime " + rep.uncovered_prime->get_str() + " inverted by every map)";
    }
    finish(payload, text);
  });

  // --- padic module -------------------------------------------------------
  auto* c_log = app.add_subcommand("padic-log", "p-adic logarithm");
  c_log->add_option("--p", f_prime)->required();
  c_log->add_option("--prec", f_prec)->required();
  c_log->add_option("--u", f_u)->required();
  c_log->callback([&] {
    long p = arg_long(f_prime, "p"), prec = arg_long(f_prec, "prec");
    PadicNumber u = PadicNumber::from_rational(p, prec, arg_rational(f_u));
    PadicNumber r = padic_log(u);
    finish(padic_json(r), r.to_string());
  });

  auto* c_ii = app.add_subcommand("iterint", "p-adic iterated integral from 0");
  c_ii->add_option("--p", f_prime)->required();
  c_ii->add_option("--prec", f_prec)->required();
  c_ii->add_option("--word", f_word, "letters 0 = dt/t, 1 = dt/(1-t); leftmost outermost")
      ->required();
  c_ii->add_option("--z", f_z)->required();
  c_ii->callback([&] {
    long p = arg_long(f_prime, "p"), prec = arg_long(f_prec, "prec");
    DlogWord word = DlogWord::parse(f_word);
    PadicNumber r = iterated_integral(word, arg_rational(f_z), p, prec);
    finish(padic_json(r), r.to_string());
  });

  auto* c_str = app.add_subcommand("strassmann", "zero-count bound for a series");
  c_str->add_option("--p", f_prime)->required();
  c_str->add_option("--coeffs", f_coeffs, "a0,a1,... as exact rationals")->required();
  c_str->add_option("--prec", f_prec, "working precision (default 20)");
  c_str->callback([&] {
    long p = arg_long(f_prime, "p");
    long prec = f_prec.empty() ? 20 : arg_long(f_prec, "prec");
    PadicSeries s = PadicSeries::from_rationals(p, prec, arg_rational_list(f_coeffs));
    long b = strassmann_bound(s);
    finish(json{{"bound", b}}, std::to_string(b));
  });

  auto* c_zeros = app.add_subcommand("zeros", "residue classes containing all Z_p zeros");
  c_zeros->add_option("--p", f_prime)->required();
  c_zeros->add_option("--depth", f_depth)->required();
  c_zeros->add_option("--coeffs", f_coeffs)->required();
  c_zeros->add_option("--prec", f_prec);
  c_zeros->callback([&] {
    long p = arg_long(f_prime, "p");
    long depth = arg_long(f_depth, "depth");
    long prec = f_prec.empty() ? std::max(20L, depth + 4) : arg_long(f_prec, "prec");
    PadicSeries s = PadicSeries::from_rationals(p, prec, arg_rational_list(f_coeffs));
    auto classes = locate_zeros(s, depth);
    json arr = json::array();
    std::string text;
    for (const auto& z : classes) {
      Integer modulus = pow(Integer(p), static_cast<unsigned long>(z.modulus_exponent));
      arr.push_back(json{{"residue", z.residue.get_str()},
                         {"modulus", modulus.get_str()},
                         {"resolved", z.resolved}});
      text += z.residue.get_str() + " mod " + modulus.get_str() +
              (z.resolved ? "" : " (unresolved)") + "\n";
    }
    if (text.empty()) text = "(none)";
    else text.pop_back();
    finish(json{{"classes", arr}}, text);
  });

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "subcommands:";
    for (const auto* sc : app.get_subcommands({})) std::cerr << " " << sc->get_name();
    std::cerr << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (format == "structured") {
    json envelope{{"command", command}, {"status", "ok"}, {"payload", outcome.payload}};
    std::cout << envelope.dump() << "\n";
  } else {
    std::cout << outcome.text << "\n";
  }
  return 0;
}
