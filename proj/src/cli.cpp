#include "cabling/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cabling/bypass.hpp"
#include "cabling/farey.hpp"
#include "cabling/torus_knot.hpp"

namespace cabling {

namespace {

std::string knot_name(const TorusKnot& k) { return "T(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")"; }

std::pair<Int, Int> parse_pair(const std::string& text, const std::string& flag) {
  auto comma = text.find(',');
  auto number = [&](std::string_view part) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw CLI::ValidationError(flag, "expected two integers A,B, got '" + text + "'");
    return v;
  };
  if (comma == std::string::npos) throw CLI::ValidationError(flag, "expected two integers A,B, got '" + text + "'");
  std::string_view sv(text);
  return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

TorusKnot knot_of(const std::string& pq) {
  auto [p, q] = parse_pair(pq, "--pq");
  return TorusKnot(p, q);
}

CableSpec cable_of(const std::string& pq, const std::string& rs) {
  auto [r, s] = parse_pair(rs, "--rs");
  return CableSpec(knot_of(pq), r, s);
}

Json opt(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<Slope>& v) { return v ? Json(v->str()) : Json(nullptr); }

Json cable_json(const CableSpec& c) {
  return Json{{"p", c.knot().p()}, {"q", c.knot().q()}, {"r", c.r()}, {"s", c.s()}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string describe(const Thickening t, Int k) {
  switch (t) {
    case Thickening::ThickensToN1: return "thickens to N_1";
    case Thickening::ThickensToNk: return "thickens to N_" + std::to_string(k);
    case Thickening::NonThickenable: return "non-thickenable";
  }
  return "?";
}

void print_classification(std::ostream& out, const Classification& cl) {
  const auto& c = cl.cable;
  out << "cable (" << c.r() << "," << c.s() << ") of " << knot_name(c.knot()) << ", slope " << c.slope().str() << '\n';
  out << "case " << cl.case_name();
  if (cl.params.n) out << " (n = " << *cl.params.n << ")";
  out << '\n';
  out << "tb_max " << cl.params.tb_max << '\n';
  out << "generators\n";
  std::size_t width = 2;
  for (const auto& g : cl.generators) width = std::max(width, g.label.size());
  for (const auto& g : cl.generators) {
    out << "  " << g.label << std::string(width - g.label.size(), ' ') << "  tb " << g.tb << "  rot " << g.rot;
    if (g.bound) out << "  bound " << *g.bound;
    if (!g.destabilizable) out << "  non-destabilizable";
    out << '\n';
  }
  out << "simple " << yes_no(cl.simple) << '\n';
}

void print_transverse(std::ostream& out, const TransverseClassification& tc, std::optional<Int> sl_floor) {
  out << "max_sl " << tc.max_sl << '\n';
  out << "branches\n";
  for (const auto& b : tc.branches) {
    out << "  " << b.origin << "  sl " << b.sl_top;
    if (b.merge_sl) out << "  merges at sl " << *b.merge_sl;
    if (!b.top_chain && !b.destabilizable) out << "  non-destabilizable";
    out << '\n';
  }
  out << "simple " << yes_no(tc.simple) << '\n';
  for (const auto& note : tc.notes) out << "note: " << note << '\n';
  if (sl_floor) {
    out << "counts\n";
    Int top = tc.max_sl;
    for (Int sl = top; sl >= *sl_floor; sl -= 2) out << "  sl " << sl << "  " << count_transverse(tc, sl) << '\n';
  }
}

struct Options {
  std::string pq = "2,3";
  std::string rs;
  bool json = false;
  std::optional<Int> tb_floor;
  std::optional<Int> sl_floor;
  std::optional<Int> den_bound;
};

}  // namespace

std::string render_mountain(const MountainRange& range) {
  if (range.counts.empty()) throw DomainError("empty mountain range");
  Int lo = range.counts.begin()->first.first, hi = lo;
  for (const auto& [key, n] : range.counts) {
    lo = std::min(lo, key.first);
    hi = std::max(hi, key.first);
  }
  std::size_t col = 1;
  for (Int rot = lo; rot <= hi; ++rot) col = std::max(col, std::to_string(rot).size());
  std::size_t gutter = std::max(std::to_string(range.tb_max).size(), std::to_string(range.tb_floor).size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  auto glyph = [](Int n) -> std::string {
    if (n == 0) return ".";
    if (n < 10) return std::string(1, char('0' + n));
    if (n < 36) return std::string(1, char('a' + (n - 10)));
    return "+";
  };

  std::ostringstream os;
  os << std::string(gutter, ' ');
  for (Int rot = lo; rot <= hi; ++rot) os << ' ' << pad(std::to_string(rot), col);
  os << '\n';
  for (Int tb = range.tb_max; tb >= range.tb_floor; --tb) {
    os << pad(std::to_string(tb), gutter);
    for (Int rot = lo; rot <= hi; ++rot) os << ' ' << pad(glyph(range.at(rot, tb)), col);
    os << '\n';
  }
  return os.str();
}

Json classification_json(const Classification& cl) {
  const auto& p = cl.params;
  Json gens = Json::array();
  for (const auto& g : cl.generators)
    gens.push_back({{"id", g.label},
                    {"tb", g.tb},
                    {"rot", g.rot},
                    {"sign", g.sign == 0 ? Json(nullptr) : Json(g.sign)},
                    {"bound", opt(g.bound)},
                    {"destabilizable", g.destabilizable}});
  return Json{{"cable", cable_json(cl.cable)},
              {"case", cl.case_name()},
              {"parameters",
               {{"w", p.w},
                {"n", opt(p.n)},
                {"k", opt(p.k)},
                {"e_n", opt(p.e_n)},
                {"e_n_a", opt(p.e_n_a)},
                {"e_n_c", opt(p.e_n_c)},
                {"c", opt(p.c)},
                {"c_prime", opt(p.c_prime)},
                {"tb_max", p.tb_max}}},
              {"generators", gens},
              {"simple", cl.simple}};
}

Json transverse_json(const Classification& cl, const TransverseClassification& tc) {
  Json j = classification_json(cl);
  j["simple"] = tc.simple;
  j["max_sl"] = tc.max_sl;
  Json branches = Json::array();
  for (const auto& b : tc.branches)
    branches.push_back({{"origin", b.origin},
                        {"sl_top", b.sl_top},
                        {"destabilizable", b.destabilizable},
                        {"merge_sl", opt(b.merge_sl)}});
  j["branches"] = branches;
  return j;
}

Json mountain_json(const Classification& cl, const MountainRange& range) {
  Json cells = Json::array();
  for (Int tb = range.tb_max; tb >= range.tb_floor; --tb)
    for (const auto& [key, n] : range.counts)
      if (key.second == tb) cells.push_back({{"rot", key.first}, {"tb", tb}, {"count", n}});
  return Json{{"cable", cable_json(cl.cable)},
              {"case", cl.case_name()},
              {"tb_max", range.tb_max},
              {"tb_floor", range.tb_floor},
              {"cells", cells}};
}

Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian and transverse cables of positive torus knots", "cabling"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  auto add_pq = [&](CLI::App* c) { c->add_option("--pq", o.pq, "torus knot P,Q (default 2,3)"); };
  auto add_rs = [&](CLI::App* c) { c->add_option("--rs", o.rs, "cable R,S; write --rs=-3,2 for negative R")->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "machine-readable output"); };

  // farey
  auto* farey = app.add_subcommand("farey", "Farey tessellation queries")->require_subcommand(1);
  std::string a_text, b_text;
  Int m = 1, n = 1;
  std::vector<Int> coeffs;
  auto slope_arg = [&](CLI::App* c, std::string& target, const char* name) {
    c->add_option(name, target, "slope a/b, or inf")->required();
  };
  auto emit = [&](Json j, const std::string& text) {
    if (o.json) print_json(out, j);
    else out << text << '\n';
  };

  auto* nb = farey->add_subcommand("neighbors", "largest and smallest Farey neighbour");
  slope_arg(nb, a_text, "u");
  add_json(nb);
  nb->callback([&] {
    action = [&] {
      auto f = neighbors(Slope::parse(a_text));
      emit({{"upper", f.upper.str()}, {"lower", f.lower.str()}}, "upper " + f.upper.str() + ", lower " + f.lower.str());
    };
  });

  auto* orc = farey->add_subcommand("oracle", "neighbours by exhaustive search");
  slope_arg(orc, a_text, "u");
  orc->add_option("--den-bound", o.den_bound, "denominator bound")->required();
  add_json(orc);
  orc->callback([&] {
    action = [&] {
      auto f = neighbors_oracle(Slope::parse(a_text), *o.den_bound);
      emit({{"upper", f.upper.str()}, {"lower", f.lower.str()}}, "upper " + f.upper.str() + ", lower " + f.lower.str());
    };
  });

  auto* cf = farey->add_subcommand("cf", "continued fraction expansion");
  slope_arg(cf, a_text, "u");
  add_json(cf);
  cf->callback([&] {
    action = [&] {
      auto e = cf_expand(Slope::parse(a_text));
      std::string text;
      for (Int c : e.coeffs) text += (text.empty() ? "" : " ") + std::to_string(c);
      emit({{"coefficients", e.coeffs}}, "[" + text + "]");
    };
  });

  auto* ev = farey->add_subcommand("eval", "evaluate a continued fraction");
  ev->add_option("coefficients", coeffs, "r0 r1 ... (r_i >= 2 for i >= 1)")->required();
  add_json(ev);
  ev->callback([&] {
    action = [&] {
      auto u = cf_eval(ContinuedFraction{coeffs});
      emit({{"slope", u.str()}}, u.str());
    };
  });

  auto pair_cmd = [&](const char* name, const char* help, std::function<Json(const Slope&, const Slope&)> f,
                      std::function<std::string(const Json&)> text) {
    auto* c = farey->add_subcommand(name, help);
    slope_arg(c, a_text, "a");
    slope_arg(c, b_text, "b");
    add_json(c);
    c->callback([&, f, text] {
      action = [&, f, text] {
        Json j = f(Slope::parse(a_text), Slope::parse(b_text));
        emit(j, text(j));
      };
    });
    return c;
  };
  pair_cmd("mediant", "Farey sum", [](const Slope& a, const Slope& b) { return Json{{"slope", mediant(a, b).str()}}; },
           [](const Json& j) { return j["slope"].get<std::string>(); });
  pair_cmd("edge", "whether two slopes share a Farey edge",
           [](const Slope& a, const Slope& b) { return Json{{"edge", is_edge(a, b)}}; },
           [](const Json& j) { return yes_no(j["edge"].get<bool>()); });
  pair_cmd("intersect", "minimal geometric intersection",
           [](const Slope& a, const Slope& b) { return Json{{"intersection", intersect(a, b)}}; },
           [](const Json& j) { return std::to_string(j["intersection"].get<Int>()); });
  auto* comb = pair_cmd(
      "combine", "m*a + n*b along a Farey edge",
      [&](const Slope& a, const Slope& b) { return Json{{"slope", farey_combine(a, b, m, n).str()}}; },
      [](const Json& j) { return j["slope"].get<std::string>(); });
  comb->add_option("--m", m, "weight of a")->required();
  comb->add_option("--n", n, "weight of b")->required();

  // bypass
  auto* bypass = app.add_subcommand("bypass", "dividing slope after a bypass attachment");
  std::string dividing, ruling, side = "front";
  Int pairs = 1;
  bypass->add_option("--dividing", dividing, "dividing slope")->required();
  bypass->add_option("--ruling", ruling, "ruling slope")->required();
  bypass->add_option("--side", side, "front or back")->check(CLI::IsMember({"front", "back"}));
  bypass->add_option("--pairs", pairs, "number of dividing curve pairs");
  bypass->add_option("--den-bound", o.den_bound, "answer by exhaustive search up to this bound");
  add_json(bypass);
  bypass->callback([&] {
    action = [&] {
      TorusState st{Slope::parse(dividing), Slope::parse(ruling), pairs};
      BypassSide bs = side == "back" ? BypassSide::back : BypassSide::front;
      Slope u = o.den_bound ? attach_bypass_oracle(st, bs, *o.den_bound) : attach_bypass(st, bs);
      emit({{"dividing", u.str()}}, u.str());
    };
  });

  // tori
  auto* tori = app.add_subcommand("tori", "solid tori representing a torus knot")->require_subcommand(1);
  std::string slope_text, inside;
  Int k_index = 1, bound = 10;

  auto* census = tori->add_subcommand("census", "solid tori with convex boundary of a given dividing slope");
  add_pq(census);
  census->add_option("--slope", slope_text, "dividing slope")->required();
  add_json(census);
  census->callback([&] {
    action = [&] {
      auto c = tori_census(knot_of(o.pq), Slope::parse(slope_text));
      Json j{{"torus_count", c.torus_count},
             {"standard_count", c.standard_count},
             {"dividing_curve_pairs", c.dividing_curve_pairs},
             {"standard_tb", c.standard_tb},
             {"case", c.note}};
      emit(j, "tori " + std::to_string(c.torus_count) + ", standard " + std::to_string(c.standard_count) + ", tb " +
                  std::to_string(c.standard_tb) + ", case " + c.note);
    };
  });

  auto* profile = tori->add_subcommand("profile", "non-thickenable tori N_k");
  add_pq(profile);
  profile->add_option("--k", k_index, "index k")->required();
  add_json(profile);
  profile->callback([&] {
    action = [&] {
      auto pr = nonthickenable_profile(knot_of(o.pq), k_index);
      Json j{{"n_k", pr.n_k}, {"dividing_curves", pr.dividing_curves}, {"torus_count", pr.torus_count}};
      emit(j, "n_k " + std::to_string(pr.n_k) + ", dividing curves " + std::to_string(pr.dividing_curves) +
                  ", tori " + std::to_string(pr.torus_count));
    };
  });

  auto* interval = tori->add_subcommand("interval", "interval of influence of e_k");
  add_pq(interval);
  interval->add_option("--k", k_index, "index k")->required();
  add_json(interval);
  interval->callback([&] {
    action = [&] {
      auto iv = influence_interval(knot_of(o.pq), k_index);
      Json j{{"e", iv.e.str()}, {"e_a", iv.e_a.str()}, {"e_c", iv.e_c.str()}};
      emit(j, "e " + iv.e.str() + ", e^a " + iv.e_a.str() + ", e^c " + iv.e_c.str());
    };
  });

  auto* exc = tori->add_subcommand("exceptional", "indices k with a non-thickenable torus");
  add_pq(exc);
  exc->add_option("--bound", bound, "largest index");
  add_json(exc);
  exc->callback([&] {
    action = [&] {
      auto ix = exceptional_indices(knot_of(o.pq), bound);
      std::string text;
      for (Int k : ix) text += (text.empty() ? "" : " ") + std::to_string(k);
      emit({{"indices", ix}}, text.empty() ? "none" : text);
    };
  });

  auto* locate_cmd = tori->add_subcommand("locate", "region of a cable slope");
  add_pq(locate_cmd);
  locate_cmd->add_option("--slope", slope_text, "cable slope s/r")->required();
  add_json(locate_cmd);
  locate_cmd->callback([&] {
    action = [&] {
      auto tag = locate(knot_of(o.pq), Slope::parse(slope_text));
      bool indexed = tag.region == Region::InfluenceUpper || tag.region == Region::InfluenceLower ||
                     tag.region == Region::TrefoilBand;
      Json j{{"region", region_name(tag.region)}, {"index", indexed ? Json(tag.index) : Json(nullptr)}};
      emit(j, region_name(tag.region) + (indexed ? " " + std::to_string(tag.index) : ""));
    };
  });

  auto* thicken = tori->add_subcommand("thicken", "how far a convex solid torus thickens");
  add_pq(thicken);
  thicken->add_option("--slope", slope_text, "dividing slope")->required();
  thicken->add_option("--pairs", pairs, "number of dividing curve pairs");
  thicken->add_option("--inside", inside, "containing N_k^sign as K,SIGN (SIGN 0 for N_1)");
  add_json(thicken);
  thicken->callback([&] {
    action = [&] {
      std::optional<ContainingTorus> in;
      if (!inside.empty()) {
        auto [k, sgn] = parse_pair(inside, "--inside");
        in = ContainingTorus{k, int(sgn)};
      }
      auto t = thickening_outcome(knot_of(o.pq), Slope::parse(slope_text), pairs, in);
      std::string text = describe(t.kind, t.k);
      Json j{{"outcome", text}, {"k", t.kind == Thickening::ThickensToNk ? Json(t.k) : Json(nullptr)}};
      emit(j, text);
    };
  });

  // classify / mountain / transverse
  auto* cls = app.add_subcommand("classify", "Legendrian classification of a cable");
  add_pq(cls);
  add_rs(cls);
  add_json(cls);
  cls->callback([&] {
    action = [&] {
      auto cl = classify(cable_of(o.pq, o.rs));
      if (o.json) print_json(out, classification_json(cl));
      else print_classification(out, cl);
    };
  });

  auto* mountain = app.add_subcommand("mountain", "number of Legendrian classes at each (rot, tb)");
  add_pq(mountain);
  add_rs(mountain);
  mountain->add_option("--tb-floor", o.tb_floor, "lowest tb row (default tb_max - 6)");
  add_json(mountain);
  mountain->callback([&] {
    action = [&] {
      auto cl = classify(cable_of(o.pq, o.rs));
      auto range = mountain_range(cl, o.tb_floor.value_or(cl.params.tb_max - 6));
      if (o.json) print_json(out, mountain_json(cl, range));
      else out << render_mountain(range);
    };
  });

  auto* trans = app.add_subcommand("transverse", "transverse classification of a cable");
  add_pq(trans);
  add_rs(trans);
  trans->add_option("--sl-floor", o.sl_floor, "also list class counts down to this sl");
  add_json(trans);
  trans->callback([&] {
    action = [&] {
      auto cable = cable_of(o.pq, o.rs);
      auto cl = classify(cable);
      auto tc = classify_transverse(cable);
      if (o.json) {
        Json j = transverse_json(cl, tc);
        if (o.sl_floor) {
          Json counts = Json::array();
          for (Int sl = tc.max_sl; sl >= *o.sl_floor; sl -= 2)
            counts.push_back({{"sl", sl}, {"count", count_transverse(tc, sl)}});
          j["counts"] = counts;
        }
        print_json(out, j);
      } else {
        print_transverse(out, tc, o.sl_floor);
      }
    };
  });

  auto* verify = app.add_subcommand("verify", "check the qualitative statements on one instance");
  std::string suite;
  Int vk = 1, vm = 1, vn = 1;
  std::optional<std::string> vpq;
  verify->add_option("--suite", suite, "qual1, qual2 or qual4")->required()->check(CLI::IsMember({"qual1", "qual2", "qual4"}));
  verify->add_option("--k", vk)->required();
  verify->add_option("--m", vm)->required();
  verify->add_option("--n", vn)->required();
  verify->add_option("--pq", vpq, "torus knot (default 2,3 for qual1/qual2, 2,5 for qual4)");
  add_json(verify);
  bool verify_failed = false;
  verify->callback([&] {
    action = [&] {
      QualSuite qs = parse_suite(suite);
      TorusKnot knot = knot_of(vpq.value_or(qs == QualSuite::qual4 ? "2,5" : "2,3"));
      auto rep = verify_qualitative(knot, qs, vk, vm, vn);
      verify_failed = !rep.all_pass();
      if (o.json) {
        Json claims = Json::array();
        for (const auto& c : rep.claims) claims.push_back({{"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
        print_json(out, {{"suite", suite_name(qs)}, {"cable", cable_json(rep.cable)}, {"claims", claims},
                         {"pass", rep.all_pass()}});
      } else {
        out << suite_name(qs) << " on cable (" << rep.cable.r() << "," << rep.cable.s() << ") of " << knot_name(knot) << '\n';
        for (const auto& c : rep.claims) {
          out << (c.pass ? "PASS " : "FAIL ") << c.claim;
          if (!c.detail.empty()) out << " (" << c.detail << ")";
          out << '\n';
        }
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Status::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Status::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Status::usage_error;
  }

  try {
    if (action) action();
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return Status::usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return Status::domain_error;
  }
  if (verify_failed) {
    err << "error: a claim failed\n";
    return Status::domain_error;
  }
  return Status::ok;
}

}  // namespace cabling
