#include "cli.hpp"

#include "liesq/decide.hpp"
#include "liesq/decomp.hpp"
#include "liesq/dynkin.hpp"
#include "liesq/json_io.hpp"
#include "liesq/matrixrep.hpp"
#include "liesq/reptype.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace liesq::cli {

namespace {

using nlohmann::json;

constexpr int kUsage = 64;
constexpr int kFailure = 70;

SemisimpleAlgebra parse_algebra(const std::string& s) {
  auto g = SemisimpleAlgebra::parse(s);
  if (!g) throw CLI::ValidationError("algebra", "unrecognised algebra: " + s);
  return *g;
}

SimpleType parse_simple(const std::string& s) {
  auto t = SimpleType::parse(s);
  if (!t) throw CLI::ValidationError("algebra", "unrecognised simple algebra: " + s);
  return *t;
}

Weight parse_weight(const SemisimpleAlgebra& g, const std::string& s) {
  auto w = weight_from_string(s);
  if (!w) throw CLI::ValidationError("weight", "cannot parse weight: " + s);
  check_dominant_weight(g, *w);
  return *w;
}

json int_json(const Int& v) {
  static const Int hi = Int(std::numeric_limits<long long>::max());
  static const Int lo = Int(std::numeric_limits<long long>::min());
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

std::string decomp_text(const Decomposition& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : d.terms) {
    if (!first) os << ", ";
    first = false;
    os << weight_to_string(w) << " x" << m;
  }
  return os.str();
}

json decomp_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& [w, m] : d.terms)
    terms.push_back({{"weight", w}, {"mult", int_json(m)}});
  return {{"algebra", d.algebra.name()},
          {"terms", std::move(terms)},
          {"total_dim", int_json(d.total_dim())},
          {"one_norm", int_json(d.one_norm())},
          {"two_norm", int_json(d.two_norm())}};
}

Backend resolve_backend(std::string choice, const MatrixRep* r) {
  if (choice == "auto" || choice.empty()) {
    const char* env = std::getenv("LIESQ_BACKEND");
    if (env) choice = env;
  }
  if (choice == "exact") return Backend::exact;
  if (choice == "float") return Backend::floating;
  if (!choice.empty() && choice != "auto")
    throw CLI::ValidationError("backend", "backend must be exact, float or auto");
  return (r && !r->is_exact()) ? Backend::floating : Backend::exact;
}

// All simple types with rank <= max_rank.
std::vector<SimpleType> simple_types_upto(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::D, r});
  if (max_rank >= 6) out.push_back({Family::E6, 6});
  if (max_rank >= 7) out.push_back({Family::E7, 7});
  if (max_rank >= 8) out.push_back({Family::E8, 8});
  if (max_rank >= 4) out.push_back({Family::F4, 4});
  if (max_rank >= 2) out.push_back({Family::G2, 2});
  return out;
}

// All nonzero dominant weights of the given rank with label sum <= max_sum.
std::vector<Weight> weights_upto(int rank, int max_sum) {
  std::vector<Weight> out;
  Weight w(rank, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank) {
      if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) out.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[pos] = v;
      rec(pos + 1, left - v);
    }
    w[pos] = 0;
  };
  rec(0, max_sum);
  return out;
}

struct Ctx {
  std::ostream& out;
  bool json_out = false;
  int exit_code = 0;
};

void emit(Ctx& ctx, const json& j, const std::string& text) {
  if (ctx.json_out)
    ctx.out << j.dump() << "\n";
  else
    ctx.out << text << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie-algebra tensor-square calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_mode = "text";
  app.add_option("--output", output_mode, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  Ctx ctx{out};

  // Shared option storage.
  std::string alg_s, w1_s, w2_s, input_path, parent_path, backend_s = "auto";
  std::string kind_s, which_s, delete_s;
  int max_rank = 8, max_sum = 3, size_arg = 0;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  bool flag_alt = false, flag_sym = false, flag_nsd = false, flag_group = false;
  bool flag_cross = false;

  auto add_backend_opts = [&](CLI::App* c) {
    c->add_option("--backend", backend_s, "exact, float or auto")
        ->check(CLI::IsMember({"exact", "float", "auto"}));
    c->add_option("--tolerance", tolerance, "float-backend tolerance");
    c->add_option("--seed", seed, "random seed (printed in reports)");
  };

  auto* c_dim = app.add_subcommand("dim", "irrep dimension");
  c_dim->add_option("algebra", alg_s)->required();
  c_dim->add_option("weight", w1_s)->required();

  auto* c_dec = app.add_subcommand("decompose", "tensor-product decomposition");
  c_dec->add_option("algebra", alg_s)->required();
  c_dec->add_option("weight1", w1_s)->required();
  c_dec->add_option("weight2", w2_s)->required();

  auto* c_sq = app.add_subcommand("square", "alternating/symmetric square");
  c_sq->add_option("algebra", alg_s)->required();
  c_sq->add_option("weight", w1_s)->required();
  c_sq->add_flag("--alt", flag_alt, "alternating square only");
  c_sq->add_flag("--sym", flag_sym, "symmetric square only");

  auto* c_dual = app.add_subcommand("dual", "dual representation");
  c_dual->add_option("algebra", alg_s)->required();
  c_dual->add_option("weight", w1_s)->required();

  auto* c_cls = app.add_subcommand("classify", "orthogonal/symplectic/unitary class");
  c_cls->add_option("algebra", alg_s)->required();
  c_cls->add_option("weight", w1_s)->required();

  auto* c_ch = app.add_subcommand("chains", "minimal chains joining two weights");
  c_ch->add_option("algebra", alg_s)->required();
  c_ch->add_option("weight1", w1_s)->required();
  c_ch->add_option("weight2", w2_s)->required();

  auto* c_parts = app.add_subcommand("parts", "delete diagram nodes, report the parts");
  c_parts->add_option("algebra", alg_s)->required();
  c_parts->add_option("weight", w1_s)->required();
  c_parts->add_option("--delete", delete_s, "1-based node indices, comma-separated")
      ->required();

  auto* c_tab = app.add_subcommand("tables", "irreducible-square scan");
  c_tab->add_option("--kind", kind_s, "alt or sym")
      ->required()
      ->check(CLI::IsMember({"alt", "sym"}));
  c_tab->add_option("--max-rank", max_rank);
  c_tab->add_option("--max-sum", max_sum);
  c_tab->add_flag("--non-self-dual", flag_nsd, "keep only non-self-dual irreps");

  auto* c_com = app.add_subcommand("commutant", "commutant dimension of generators");
  c_com->add_option("--input", input_path, "matrix JSON file")->required();
  c_com->add_flag("--group", flag_group,
                  "treat inputs as unitaries and analyse {U (x) U}");
  c_com->add_flag("--square", flag_cross, "analyse the tensor square of the inputs");
  add_backend_opts(c_com);

  auto* c_clo = app.add_subcommand("closure", "generated real Lie algebra");
  c_clo->add_option("--input", input_path)->required();
  add_backend_opts(c_clo);

  auto* c_pro = app.add_subcommand("profile", "isotypic block profile");
  c_pro->add_option("--input", input_path)->required();
  add_backend_opts(c_pro);

  auto* c_decide = app.add_subcommand("decide", "full-algebra decision");
  c_decide->require_subcommand(1);
  auto* d_su = c_decide->add_subcommand("su", "is the generated algebra su(n)?");
  auto* d_so = c_decide->add_subcommand("so", "is the generated algebra so(k)?");
  auto* d_sp = c_decide->add_subcommand("sp", "is the generated algebra sp(l)?");
  auto* d_eq = c_decide->add_subcommand("equal", "same algebra as the parent set?");
  for (auto* c : {d_su, d_so, d_sp}) {
    c->add_option("--dim", size_arg, "n for su, k for so, l for sp")->required();
    c->add_option("--input", input_path)->required();
    c->add_flag("--closure-check", flag_cross, "also run the closure oracle");
    add_backend_opts(c);
  }
  d_eq->add_option("--input", input_path)->required();
  d_eq->add_option("--parent", parent_path)->required();
  d_eq->add_flag("--closure-check", flag_cross);
  add_backend_opts(d_eq);

  auto* c_chk = app.add_subcommand("check", "property-suite sweeps");
  c_chk->add_option("which", which_s, "cz, kw, ptranspose or malcev-fs")
      ->required()
      ->check(CLI::IsMember({"cz", "kw", "ptranspose", "malcev-fs"}));
  c_chk->add_option("--max-rank", max_rank)->capture_default_str();
  c_chk->add_option("--max-sum", max_sum)->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  ctx.json_out = output_mode == "json";

  try {
    if (*c_dim) {
      auto g = parse_algebra(alg_s);
      auto w = parse_weight(g, w1_s);
      Int d = irrep_dim(g, w);
      emit(ctx, {{"dim", int_json(d)}}, d.str());
    } else if (*c_dec) {
      auto g = parse_algebra(alg_s);
      auto d = tensor_decompose(g, parse_weight(g, w1_s), parse_weight(g, w2_s));
      emit(ctx, decomp_json(d), decomp_text(d));
    } else if (*c_sq) {
      auto g = parse_algebra(alg_s);
      auto w = parse_weight(g, w1_s);
      if (flag_alt && flag_sym)
        throw CLI::ValidationError("square", "--alt and --sym are mutually exclusive");
      if (flag_alt) {
        auto d = alt_square(g, w);
        emit(ctx, decomp_json(d), decomp_text(d));
      } else if (flag_sym) {
        auto d = sym_square(g, w);
        emit(ctx, decomp_json(d), decomp_text(d));
      } else {
        auto [a, s] = alt_sym_squares(g, w);
        emit(ctx, {{"alt", decomp_json(a)}, {"sym", decomp_json(s)}},
             "alt: " + decomp_text(a) + "\nsym: " + decomp_text(s));
      }
    } else if (*c_dual) {
      auto g = parse_algebra(alg_s);
      auto w = parse_weight(g, w1_s);
      Weight d = dual_weight(g, w);
      emit(ctx,
           {{"dual", d}, {"self_dual", d == w}},
           weight_to_string(d) + (d == w ? " (self-dual)" : ""));
    } else if (*c_cls) {
      auto g = parse_algebra(alg_s);
      auto w = parse_weight(g, w1_s);
      RepClass c = malcev_class(g, w);
      emit(ctx, {{"class", to_string(c)}}, to_string(c));
    } else if (*c_ch) {
      auto t = parse_simple(alg_s);
      SemisimpleAlgebra g{{t}};
      auto l = parse_weight(g, w1_s);
      auto m = parse_weight(g, w2_s);
      auto chains = minimal_chains(t, l, m);
      json jc = json::array();
      std::ostringstream os;
      for (const auto& ch : chains) {
        jc.push_back(ch.root_indices);
        for (size_t i = 0; i < ch.root_indices.size(); ++i)
          os << (i ? " " : "") << ch.root_indices[i];
        os << "\n";
      }
      emit(ctx, {{"chains", std::move(jc)}},
           chains.empty() ? "(none)" : os.str().substr(0, os.str().size() - 1));
    } else if (*c_parts) {
      auto t = parse_simple(alg_s);
      SemisimpleAlgebra g{{t}};
      auto w = parse_weight(g, w1_s);
      auto del_w = weight_from_string(delete_s);
      if (!del_w) throw CLI::ValidationError("delete", "cannot parse node list");
      std::set<int> deleted(del_w->begin(), del_w->end());
      auto [sub, labels] = part_weight(t, w, deleted);
      emit(ctx,
           {{"algebra", sub.name()}, {"weight", labels}},
           sub.name() + " " + (labels.empty() ? "()" : weight_to_string(labels)));
    } else if (*c_tab) {
      auto kind = kind_s == "alt" ? SquareKind::alt : SquareKind::sym;
      auto rows = scan_tables(kind, max_rank, max_sum);
      json jr = json::array();
      std::ostringstream os;
      for (const auto& r : rows) {
        if (flag_nsd && is_self_dual(SemisimpleAlgebra{{r.type}}, r.lambda)) continue;
        jr.push_back({{"type", r.type.name()},
                      {"lambda", r.lambda},
                      {"square", r.square},
                      {"dim", int_json(r.dim)},
                      {"square_dim", int_json(r.square_dim)}});
        os << r.type.name() << " " << weight_to_string(r.lambda) << " "
           << weight_to_string(r.square) << " " << r.dim << " " << r.square_dim << "\n";
      }
      if (ctx.json_out)
        out << json{{"kind", kind_s}, {"rows", std::move(jr)}}.dump() << "\n";
      else
        out << os.str();
    } else if (*c_com) {
      MatrixRep r = load_matrix_rep_file(input_path);
      Backend b = resolve_backend(backend_s, &r);
      if (flag_group) {
        if (!r.is_exact())
          throw std::invalid_argument("--group needs exact unitaries");
        int d = commutant_dimension_group(r.exact, b, tolerance);
        emit(ctx,
             {{"dim", d},
              {"backend", b == Backend::exact ? "exact" : "float"},
              {"seed", seed}},
             "dim " + std::to_string(d));
      } else {
        if (flag_cross) r = tensor_square(r);
        CommutantResult cr = commutant(r, b, tolerance, seed);
        json j{{"dim", cr.dim},
               {"indeterminate", cr.indeterminate},
               {"backend", b == Backend::exact ? "exact" : "float"},
               {"seed", seed}};
        std::ostringstream os;
        if (cr.indeterminate)
          os << "indeterminate";
        else
          os << "dim " << cr.dim;
        os << " [backend " << (b == Backend::exact ? "exact" : "float") << ", seed "
           << seed;
        if (b == Backend::floating) {
          j["tolerance"] = tolerance;
          j["spectral_gap"] = cr.spectral_gap;
          os << ", tolerance " << tolerance << ", gap " << cr.spectral_gap;
        }
        os << "]";
        emit(ctx, j, os.str());
        if (cr.indeterminate) ctx.exit_code = 2;
      }
    } else if (*c_clo) {
      MatrixRep r = load_matrix_rep_file(input_path);
      ClosureResult cl = lie_closure(r, tolerance);
      emit(ctx, {{"dim", cl.dim}}, "dim " + std::to_string(cl.dim));
    } else if (*c_pro) {
      MatrixRep r = load_matrix_rep_file(input_path);
      IsotypicProfile p = isotypic_profile(r, seed, tolerance < 1e-8 ? 1e-7 : tolerance);
      json jb = json::array();
      std::ostringstream os;
      for (auto [d, m] : p.blocks) {
        jb.push_back({{"dim", d}, {"mult", m}});
        os << "(d=" << d << ",m=" << m << ") ";
      }
      emit(ctx,
           {{"indeterminate", p.indeterminate},
            {"diagnostic", p.diagnostic},
            {"blocks", std::move(jb)},
            {"seed", p.seed},
            {"tolerance", p.tolerance}},
           p.indeterminate ? "indeterminate: " + p.diagnostic
                           : os.str() + "[seed " + std::to_string(p.seed) + "]");
      if (p.indeterminate) ctx.exit_code = 2;
    } else if (*c_decide) {
      DecideOptions opt;
      opt.tolerance = tolerance;
      opt.seed = seed;
      opt.cross_check_closure = flag_cross;
      MatrixRep r = load_matrix_rep_file(input_path);
      opt.backend = resolve_backend(backend_s, &r);
      DecisionReport rep;
      if (*d_su)
        rep = is_full_su(r, size_arg, opt);
      else if (*d_so)
        rep = is_full_so(r, size_arg, opt);
      else if (*d_sp)
        rep = is_full_sp(r, size_arg, opt);
      else
        rep = equals_parent(r, load_matrix_rep_file(parent_path), opt);
      if (ctx.json_out)
        out << rep.to_json() << "\n";
      else
        out << rep.to_text() << "\n";
      ctx.exit_code = rep.exit_code();
    } else if (*c_chk) {
      long cases = 0, violations = 0;
      auto note = [&](bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
          ++violations;
          err << "violation: " << what << "\n";
        }
      };
      if (which_s == "cz" || which_s == "kw" || which_s == "malcev-fs") {
        for (const auto& t : simple_types_upto(max_rank)) {
          SemisimpleAlgebra g{{t}};
          auto ws = weights_upto(t.rank, max_sum);
          for (const auto& l : ws) {
            if (which_s == "kw") {
              if (!is_self_dual(g, l)) continue;
              note(gap_bound_check(t, l), t.name() + " " + weight_to_string(l));
            } else if (which_s == "malcev-fs") {
              note(malcev_class(t, l) == fs_oracle(t, l),
                   t.name() + " " + weight_to_string(l));
            } else {
              for (const auto& m : ws) {
                auto d1 = tensor_decompose(g, l, m);
                auto d2 = tensor_decompose(g, l, dual_weight(g, m));
                note(d1.one_norm() == d2.one_norm() && d1.two_norm() == d2.two_norm(),
                     t.name() + " " + weight_to_string(l) + " " + weight_to_string(m));
              }
            }
          }
        }
      } else {  // ptranspose
        std::vector<MatrixRep> reps = {
            standard_generators(ClassicalFamily::su, 2),
            standard_generators(ClassicalFamily::su, 3),
            standard_generators(ClassicalFamily::so, 5),
            standard_generators(ClassicalFamily::sp, 2),
        };
        for (const auto& r : reps)
          note(partial_transpose_check(r, r), "dim " + std::to_string(r.dim));
      }
      emit(ctx,
           {{"suite", which_s}, {"cases", cases}, {"violations", violations}},
           "checked " + std::to_string(cases) + " cases, violations " +
               std::to_string(violations));
      if (violations > 0) ctx.exit_code = 3;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return ctx.exit_code;
}

}  // namespace liesq::cli
