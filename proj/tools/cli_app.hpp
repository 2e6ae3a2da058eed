#pragma once

// Command-line front end. Every subcommand reads single JSON documents (inline
// or from a file path) and writes one JSON document to `out`.
//
// Exit codes: 0 success / PASS, 1 FAIL verdict, 2 input error.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "enriques/enriques.hpp"
#include "enriques/io.hpp"

namespace enriques::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

using io::Json;

struct Context {
  GramLattice lattice;
  std::optional<CurveTestSet> test_set;
  Int kmax = kDefaultKmax;
  std::ostream& out;
  std::ostream& err;

  void emit(const Json& doc) const { out << doc.dump() << '\n'; }
};

/// Ten half-pencils of E10, raising the coordinate bound until found.
inline IsotropicSequence standard_half_pencils(const GramLattice& L, std::size_t length = 10,
                                               Int max_bound = 4) {
  for (Int b = 1;; ++b) {
    try {
      return find_isotropic_sequence(L, length, b);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound || b >= max_bound) throw;
    }
  }
}

struct GalleryLine {
  std::string name;
  Json expected;
  Json computed;
  bool pass;
};

/// The reflection examples: a (-2)-curve, the rank-3 bundle over |F+G|, and
/// the family O(aF + bG).
inline std::vector<GalleryLine> run_gallery(const GramLattice& L) {
  if (L.rank() < 3) throw Error(ErrorKind::InvalidArgument, "gallery needs rank >= 3");
  const std::size_t n = L.rank();
  std::vector<GalleryLine> lines;

  // Example 1: R(O_C) for a (-2)-curve C is extremal of rank 2.
  {
    const NumClass C = NumClass::basis(n, 2);
    const MukaiVector oc = curve_sheaf_vector(L, C, 0);
    const MukaiVector rc = reflect(oc);
    const MukaiVector expected{2, DivisorClass(C, 1), 0};
    Json computed = io::to_json(rc);
    computed["square"] = square(L, rc);
    Json exp = io::to_json(expected);
    exp["square"] = 2;
    lines.push_back({"R(O_C), C^2 = -2: extremal rank 2", exp, computed,
                     square(L, C) == -2 && rc == expected && square(L, rc) == 2});
  }

  // Example 2: F, G half-pencils with F.G = 1. The extension
  // 0 -> K^2 -> E -> J_{x+y}(F+G) -> 0 gives v(E); R(E) = O(F+G).
  {
    const NumClass F = NumClass::basis(n, 0);
    const NumClass G = NumClass::basis(n, 1);
    const DivisorClass FG(F + G);
    const MukaiVector ideal = line_bundle_vector(L, FG) - 2 * point_vector(n);
    const MukaiVector E = 2 * MukaiVector{1, canonical_class(n), 1} + ideal;
    const MukaiVector target = line_bundle_vector(L, FG);
    const MukaiVector r1 = reflect(E);
    const MukaiVector r2 = reflect_via_sequences(E);
    Json computed{{"v(E)", io::to_json(E)},
                  {"exceptional", is_exceptional(L, E)},
                  {"R(E)", io::to_json(r1)},
                  {"R_seq(E)", io::to_json(r2)}};
    Json exp{{"v(E)", io::to_json(MukaiVector{3, FG, 1})},
             {"exceptional", true},
             {"R(E)", io::to_json(target)},
             {"R_seq(E)", io::to_json(target)}};
    lines.push_back({"R(E) = O(F+G) for the rank-3 extension", exp, computed,
                     computed == exp});
  }

  // Example 3: R(O(aF + bG)) has rank 2ab + 1 for a >= b >= 2.
  {
    const NumClass F = NumClass::basis(n, 0);
    const NumClass G = NumClass::basis(n, 1);
    Json exp = Json::array();
    Json computed = Json::array();
    for (Int a = 2; a <= 5; ++a) {
      for (Int b = 2; b <= a; ++b) {
        const MukaiVector v = line_bundle_vector(L, DivisorClass(a * F + b * G));
        const MukaiVector rv = reflect(v);
        exp.push_back(Json{{"a", a}, {"b", b}, {"rank", 2 * a * b + 1}, {"exceptional", true}});
        computed.push_back(
            Json{{"a", a}, {"b", b}, {"rank", rv.r}, {"exceptional", is_exceptional(L, rv)}});
      }
    }
    lines.push_back({"rank R(O(aF+bG)) = 2ab+1", exp, computed, exp == computed});
  }
  return lines;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Mukai-lattice calculus on Enriques surfaces", "enriques"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string lattice_path;
  std::string test_set_path;
  Int kmax = kDefaultKmax;
  app.add_option("--lattice", lattice_path, "Gram matrix file (default: E10 preset)");
  app.add_option("--test-set", test_set_path, "CurveTestSet JSON (file or inline)");
  app.add_option("--kmax", kmax, "Step budget for find-polarization")->check(CLI::PositiveNumber);

  std::function<int(Context&)> action;
  std::string arg0;
  std::string arg1;
  Int length = 10;
  std::optional<Int> bound;

  auto unary = [&](const char* name, const char* desc, const char* argname,
                   std::function<int(Context&, const Json&)> body) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option(argname, arg0, "JSON document or path")->required();
    sub->callback([&, body, name] {
      action = [&, body, name](Context& ctx) {
        return body(ctx, io::load_document(arg0, std::string(name) + " argument"));
      };
    });
  };
  auto binary = [&](const char* name, const char* desc,
                    std::function<int(Context&, const Json&, const Json&)> body) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("first", arg0, "JSON document or path")->required();
    sub->add_option("second", arg1, "JSON document or path")->required();
    sub->callback([&, body, name] {
      action = [&, body, name](Context& ctx) {
        return body(ctx, io::load_document(arg0, std::string(name) + " argument 1"),
                    io::load_document(arg1, std::string(name) + " argument 2"));
      };
    });
  };
  auto require_test_set = [](const Context& ctx) -> const CurveTestSet& {
    if (!ctx.test_set) throw Error(ErrorKind::InvalidArgument, "--test-set is required");
    return *ctx.test_set;
  };

  binary("pair", "intersection pairing of two numerical classes",
         [](Context& ctx, const Json& a, const Json& b) {
           const auto n = ctx.lattice.rank();
           ctx.emit(Json{{"pair", pair(ctx.lattice, io::num_class_from_json(a, n, "x"),
                                       io::num_class_from_json(b, n, "y"))}});
           return kExitOk;
         });
  binary("chi", "Euler pairing chi(v, w)", [](Context& ctx, const Json& a, const Json& b) {
    const auto n = ctx.lattice.rank();
    ctx.emit(Json{{"chi", mukai_pair(ctx.lattice, io::vector_from_json(a, n, "v"),
                                     io::vector_from_json(b, n, "w"))}});
    return kExitOk;
  });
  unary("from-chern", "Mukai vector from {r, d, eps, c2}", "chern",
        [](Context& ctx, const Json& j) {
          const auto n = ctx.lattice.rank();
          const Int r = io::detail::integer(io::detail::field(j, "r", "chern"), "chern.r");
          const Int c2 = io::detail::integer(io::detail::field(j, "c2", "chern"), "chern.c2");
          ctx.emit(io::to_json(from_chern(ctx.lattice, r, io::divisor_from_json(j, n, "chern"), c2)));
          return kExitOk;
        });
  unary("dual", "v(E^*)", "vector", [](Context& ctx, const Json& j) {
    ctx.emit(io::to_json(dual(io::vector_from_json(j, ctx.lattice.rank()))));
    return kExitOk;
  });
  binary("twist", "v(E (x) O(M))", [](Context& ctx, const Json& a, const Json& b) {
    const auto n = ctx.lattice.rank();
    ctx.emit(io::to_json(twist(ctx.lattice, io::vector_from_json(a, n),
                               io::divisor_from_json(b, n, "M"))));
    return kExitOk;
  });
  unary("reflect", "reflection R(v)", "vector", [](Context& ctx, const Json& j) {
    ctx.emit(io::to_json(reflect(io::vector_from_json(j, ctx.lattice.rank()))));
    return kExitOk;
  });
  unary("reflect-seq", "R(v) through the evaluation and extension sequences", "vector",
        [](Context& ctx, const Json& j) {
          ctx.emit(io::to_json(reflect_via_sequences(io::vector_from_json(j, ctx.lattice.rank()))));
          return kExitOk;
        });
  unary("pullback", "pullback to the K3 double cover", "vector", [](Context& ctx, const Json& j) {
    ctx.emit(io::to_json(pullback(io::vector_from_json(j, ctx.lattice.rank()))));
    return kExitOk;
  });
  unary("is-exceptional", "r > 0 and v^2 = 1", "vector", [](Context& ctx, const Json& j) {
    const MukaiVector v = io::vector_from_json(j, ctx.lattice.rank());
    ctx.emit(Json{{"exceptional", is_exceptional(ctx.lattice, v)}, {"square", square(ctx.lattice, v)}});
    return kExitOk;
  });
  binary("find-polarization", "ample H' with gcd(D.H', r) = 1 for an exceptional vector",
         [](Context& ctx, const Json& a, const Json& b) {
           const auto n = ctx.lattice.rank();
           const MukaiVector v = io::vector_from_json(a, n);
           const DivisorClass seed = io::divisor_from_json(b, n, "Hseed");
           if (!ctx.test_set) ctx.test_set = half_pencil_test_set(ctx.lattice, standard_half_pencils(ctx.lattice));
           const auto cert = find_coprime_ample(ctx.lattice, v, seed, *ctx.test_set, ctx.kmax);
           const std::string failure = verify_certificate(ctx.lattice, v, seed, *ctx.test_set, cert);
           Json doc = io::to_json(cert);
           doc["verification"] = failure.empty() ? "PASS" : "FAIL";
           ctx.emit(doc);
           ctx.err << (failure.empty() ? "PASS certificate re-verified" : "FAIL " + failure) << '\n';
           return failure.empty() ? kExitOk : kExitFail;
         });
  {
    auto* sub = app.add_subcommand("isotropic-seq", "isotropic sequence f_i^2 = 0, f_i.f_j = 1");
    sub->add_option("--length", length, "sequence length (1..10)")->capture_default_str();
    sub->add_option("--bound", bound, "coordinate bound (default: raise from 1 to 4)");
    sub->callback([&] {
      action = [&](Context& ctx) {
        const auto seq = bound ? find_isotropic_sequence(ctx.lattice, static_cast<std::size_t>(length), *bound)
                               : standard_half_pencils(ctx.lattice, static_cast<std::size_t>(length));
        ctx.emit(io::to_json(seq));
        return kExitOk;
      };
    });
  }
  unary("check-collection", "chi-level exceptional collection conditions", "vectors",
        [](Context& ctx, const Json& j) {
          if (!j.is_array()) throw Error(ErrorKind::Parse, "vectors: expected an array");
          std::vector<MukaiVector> vs;
          for (std::size_t i = 0; i < j.size(); ++i) {
            vs.push_back(io::vector_from_json(j[i], ctx.lattice.rank(), "vectors[" + std::to_string(i) + "]"));
          }
          const auto report = check_exceptional_collection_necessary(ctx.lattice, vs);
          ctx.emit(io::to_json(report));
          return report.pass ? kExitOk : kExitFail;
        });
  unary("rr", "chi(O(D)) = 1 + D^2/2", "divisor", [](Context& ctx, const Json& j) {
    ctx.emit(Json{{"rr", rr_line_bundle(ctx.lattice, io::divisor_from_json(j, ctx.lattice.rank()))}});
    return kExitOk;
  });
  unary("classify", "irreducible or k times a pencil, for |D| without fixed components",
        "divisor", [](Context& ctx, const Json& j) {
          const auto kind = classify_free_system(ctx.lattice, io::divisor_from_json(j, ctx.lattice.rank()));
          if (const auto* p = std::get_if<Pencil>(&kind)) {
            ctx.emit(Json{{"type", "pencil"}, {"k", p->multiplicity}, {"p", io::to_json(p->primitive)}});
          } else {
            ctx.emit(Json{{"type", "irreducible"}});
          }
          return kExitOk;
        });
  unary("ample-criteria", "nef and D^2 >= 6 consequences", "divisor",
        [require_test_set](Context& ctx, const Json& j) {
          const auto& T = require_test_set(ctx);
          const auto rep = ample_criteria(ctx.lattice, io::divisor_from_json(j, ctx.lattice.rank()), T);
          Json doc{{"criteria_met", rep.criteria_met}};
          if (rep.criteria_met) {
            doc["ample"] = rep.ample;
            doc["two_D_globally_generated"] = rep.two_D_globally_generated;
            doc["three_D_very_ample"] = rep.three_D_very_ample;
          }
          ctx.emit(doc);
          return kExitOk;
        });
  app.add_subcommand("gallery", "reflection examples, expected vs computed")->callback([&] {
    action = [](Context& ctx) {
      Json lines = Json::array();
      bool all = true;
      for (const auto& line : run_gallery(ctx.lattice)) {
        lines.push_back(Json{{"example", line.name},
                             {"expected", line.expected},
                             {"computed", line.computed},
                             {"verdict", line.pass ? "PASS" : "FAIL"}});
        ctx.err << (line.pass ? "PASS " : "FAIL ") << line.name << '\n';
        all = all && line.pass;
      }
      ctx.emit(Json{{"examples", lines}});
      return all ? kExitOk : kExitFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Context ctx{lattice_path.empty() ? e10_preset() : load_gram_file(lattice_path), std::nullopt,
                kmax, out, err};
    if (!test_set_path.empty()) {
      ctx.test_set = io::test_set_from_json(ctx.lattice, io::load_document(test_set_path, "--test-set"));
    }
    return action(ctx);
  } catch (const Error& e) {
    const bool verdict = e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::NotFound;
    out << Json{{"error", std::string(to_string(e.kind()))}, {"detail", e.what()}}.dump() << '\n';
    err << "error: " << e.what() << '\n';
    return verdict ? kExitFail : kExitInput;
  }
}

}  // namespace enriques::cli
