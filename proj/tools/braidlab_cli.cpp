#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidlab/braidlab.hpp"
#include "json.hpp"

using namespace braidlab;
using nlohmann::ordered_json;

namespace {

struct Common {
  std::string structure = "classical";
  std::uint64_t seed = kDefaultLedgerSeed;
  bool json = false;
};

// Exit status 1 without a message: a check or predicate came out false.
struct CheckFailed {};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> factor_words(const GarsideStructure& g, const NormalForm& nf) {
  std::vector<std::string> out;
  for (const auto& f : nf.factors) out.push_back(g.word_of(f).to_string());
  return out;
}

ordered_json nf_json(const GarsideStructure& g, const NormalForm& nf) {
  return {{"structure", to_string(nf.kind)},
          {"side", nf.side == Side::Left ? "left" : "right"},
          {"strands", nf.strands},
          {"inf", nf.inf},
          {"factors", factor_words(g, nf)},
          {"canonical_length", nf.canonical_length()},
          {"word", to_word(g, nf).to_string()}};
}

std::string nf_text(const GarsideStructure& g, const NormalForm& nf) {
  const std::string d = nf.kind == StructureKind::Classical ? "Delta" : "delta";
  std::string out = d + "^" + std::to_string(nf.inf);
  for (const auto& w : factor_words(g, nf)) out += " . [" + w.substr(w.find(':') + 1) + " ]";
  if (nf.side == Side::Right) {
    out.clear();
    for (const auto& w : factor_words(g, nf)) out += "[" + w.substr(w.find(':') + 1) + " ] . ";
    out += d + "^" + std::to_string(nf.inf);
  }
  return out;
}

void emit(const Common& c, const ordered_json& j, const std::string& text) {
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string matrix_text(const IntegerMatrix& m) { return m.to_string(); }

FiniteImageMap parse_images(const FinitePresentation& p, const std::vector<std::string>& specs,
                            int degree) {
  FiniteImageMap f;
  f.images.assign(static_cast<std::size_t>(p.rank()), Permutation(degree));
  std::vector<bool> seen(static_cast<std::size_t>(p.rank()), false);
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("image '" + s + "' must look like name=(1,2,3)");
    const std::string name = s.substr(0, eq);
    const auto it = std::find(p.generators.begin(), p.generators.end(), name);
    if (it == p.generators.end()) throw ParseError("unknown generator '" + name + "'");
    const auto k = static_cast<std::size_t>(it - p.generators.begin());
    f.images[k] = Permutation::from_cycles(degree, s.substr(eq + 1));
    seen[k] = true;
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw ParseError("no image given for generator '" + p.generators[k] + "'");
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidlab: braid group computations and verification ledger"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--structure", common.structure, "Garside structure: classical or band")
      ->check(CLI::IsMember({"classical", "band"}));
  app.add_option("--seed", common.seed, "Seed for randomized suites");
  app.add_flag("--json", common.json, "Machine-readable output");
  app.fallthrough();

  auto structure = [&](int n) { return make_structure(parse_structure_kind(common.structure), n); };
  std::function<int()> action;

  std::string w1, w2, side = "left";
  auto* nf = app.add_subcommand("nf", "Normal form of a braid word");
  nf->add_option("word", w1, "Braid word, e.g. 'B3: 1 -2'")->required();
  nf->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  nf->callback([&] {
    action = [&] {
      const BraidWord w = BraidWord::parse(w1);
      const auto g = structure(w.strands());
      const NormalForm x = normal_form(*g, w, side == "left" ? Side::Left : Side::Right);
      emit(common, nf_json(*g, x), nf_text(*g, x));
      return 0;
    };
  });

  auto* eq = app.add_subcommand("eq", "Decide whether two braid words are equal (exit 1 if not)");
  eq->add_option("a", w1)->required();
  eq->add_option("b", w2)->required();
  eq->callback([&] {
    action = [&] {
      const BraidWord a = BraidWord::parse(w1), b = BraidWord::parse(w2);
      const bool same = words_equal(*structure(a.strands()), a, b);
      emit(common, {{"equal", same}}, same ? "equal" : "not equal");
      return same ? 0 : 1;
    };
  });

  auto* conj = app.add_subcommand("conj", "Conjugacy test with a verified witness (exit 1 if not conjugate)");
  conj->add_option("a", w1)->required();
  conj->add_option("b", w2)->required();
  conj->callback([&] {
    action = [&] {
      const BraidWord a = BraidWord::parse(w1), b = BraidWord::parse(w2);
      const auto cert = conjugacy_solve(*structure(a.strands()), a, b);
      ordered_json j{{"conjugate", cert.conjugate}};
      if (cert.witness) j["witness"] = cert.witness->to_string();
      if (!cert.reason.empty()) j["reason"] = cert.reason;
      emit(common, j,
           cert.conjugate ? "conjugate, witness " + cert.witness->to_string()
                          : "not conjugate: " + cert.reason);
      return cert.conjugate ? 0 : 1;
    };
  });

  auto* slide = app.add_subcommand("slide", "One cyclic sliding step");
  slide->add_option("word", w1)->required();
  slide->callback([&] {
    action = [&] {
      const BraidWord w = BraidWord::parse(w1);
      const auto g = structure(w.strands());
      const NormalForm x = normal_form(*g, w);
      const Simple p = preferred_prefix(*g, x);
      const NormalForm s = cyclic_sliding(*g, x);
      ordered_json j{{"preferred_prefix", g->word_of(p).to_string()}, {"slid", nf_json(*g, s)}};
      emit(common, j, "prefix " + g->word_of(p).to_string() + "\nslid   " + nf_text(*g, s));
      return 0;
    };
  });

  std::size_t max_elements = 200000;
  auto* sc = app.add_subcommand("sc", "Sliding circuits of a braid");
  sc->add_option("word", w1)->required();
  sc->add_option("--max-elements", max_elements, "Cap on the size of SC");
  sc->callback([&] {
    action = [&] {
      const BraidWord w = BraidWord::parse(w1);
      const auto g = structure(w.strands());
      SlidingCircuitOptions opt;
      opt.max_elements = max_elements;
      const SlidingCircuits s = sliding_circuits(*g, w, opt);
      ordered_json elems = ordered_json::array();
      std::string text;
      int summit = -1;
      for (const auto& e : s.entries) {
        elems.push_back({{"element", nf_text(*g, e.element)},
                         {"conjugator", to_word(*g, e.conjugator).to_string()}});
        text += nf_text(*g, e.element) + "\n";
        if (summit < 0 || e.element.canonical_length() < summit) summit = e.element.canonical_length();
      }
      emit(common, {{"size", s.entries.size()}, {"summit_length", summit}, {"elements", elems}},
           text + "size " + std::to_string(s.entries.size()) + ", summit length " + std::to_string(summit));
      return 0;
    };
  });

  auto* lk = app.add_subcommand("lk", "Linking numbers of a pure braid");
  lk->add_option("word", w1)->required();
  lk->callback([&] {
    action = [&] {
      const LinkingMatrix m = linking_matrix(BraidWord::parse(w1));
      ordered_json j = ordered_json::object();
      std::string text;
      for (auto [i, k, v] : m.triples()) {
        const std::string key = std::to_string(i) + "," + std::to_string(k);
        j[key] = v;
        text += "lk(" + key + ") = " + std::to_string(v) + "\n";
      }
      emit(common, j, text.empty() ? "(no pairs)" : text.substr(0, text.size() - 1));
      return 0;
    };
  });

  auto* perm = app.add_subcommand("perm", "Permutation of a braid");
  perm->add_option("word", w1)->required();
  perm->callback([&] {
    action = [&] {
      const BraidWord w = BraidWord::parse(w1);
      const Permutation p = permutation_of(w);
      std::vector<int> images;
      for (int i = 1; i <= p.degree(); ++i) images.push_back(p(i));
      emit(common,
           {{"cycles", p.to_string()}, {"images", images}, {"cycle_type", p.cycle_type()},
            {"exponent_sum", exponent_sum(w)}},
           p.to_string());
      return 0;
    };
  });

  std::string composition;
  std::vector<std::string> interiors;
  auto* cab = app.add_subcommand("cable", "Cable a tubular braid with interior braids");
  cab->add_option("tubular", w1)->required();
  cab->add_option("--composition,-m", composition, "Block widths, e.g. 2,2")->required();
  cab->add_option("--interior,-i", interiors, "Interior braid per block (default trivial)");
  cab->callback([&] {
    action = [&] {
      const Composition m = Composition::parse(composition);
      std::vector<BraidWord> inner;
      for (std::size_t b = 0; b < m.parts().size(); ++b) {
        inner.push_back(b < interiors.size() ? BraidWord::parse(interiors[b]) : BraidWord(m.parts()[b]));
      }
      const BraidWord w = cable(BraidWord::parse(w1), inner, m);
      emit(common, {{"word", w.to_string()}}, w.to_string());
      return 0;
    };
  });

  auto* ext = app.add_subcommand("extract", "Tubular and interior braids of a tube-preserving braid");
  ext->add_option("word", w1)->required();
  ext->add_option("--composition,-m", composition, "Block widths")->required();
  ext->callback([&] {
    action = [&] {
      const Composition m = Composition::parse(composition);
      const BraidWord w = BraidWord::parse(w1);
      const BraidWord t = extract_tubular(w, m);
      std::vector<std::string> inner;
      std::string text = "tubular  " + t.to_string();
      for (int b = 1; b <= m.blocks(); ++b) {
        inner.push_back(extract_interior(w, m, b).to_string());
        text += "\ninterior " + std::to_string(b) + " " + inner.back();
      }
      emit(common, {{"tubular", t.to_string()}, {"interiors", inner}}, text);
      return 0;
    };
  });

  std::string target = "pure";
  auto* ab = app.add_subcommand("abelianize", "Coordinates in P_n^ab or J_n^ab (n >= 5)");
  ab->add_option("word", w1)->required();
  ab->add_option("--target", target, "pure or J")->check(CLI::IsMember({"pure", "J"}));
  ab->callback([&] {
    action = [&] {
      const BraidWord w = BraidWord::parse(w1);
      const auto v = abelianize_pure(w, target == "J" ? Subgroup::J : Subgroup::Pure);
      std::string text;
      const auto pairs = strand_pairs(w.strands());
      for (std::size_t i = 0; i < v.size(); ++i) {
        text += "A" + std::to_string(pairs[i].first) + std::to_string(pairs[i].second) + ":" +
                std::to_string(v[i]) + (i + 1 < v.size() ? " " : "");
      }
      emit(common, {{"target", target}, {"coordinates", v}}, text);
      return 0;
    };
  });

  std::string preset, presentation_file;
  std::vector<std::string> images, basis;
  int degree = 0;
  auto* kab = app.add_subcommand("kernel-ab", "Abelianization of the kernel of a map onto a finite permutation group");
  kab->add_option("--preset", preset, "b4prime (image A4) or b3prime (image A3)")
      ->check(CLI::IsMember({"b4prime", "b3prime"}));
  kab->add_option("--presentation", presentation_file, "Presentation file");
  kab->add_option("--image", images, "Generator image, name=(1,2,3)");
  kab->add_option("--degree", degree, "Degree of the image permutations");
  kab->add_option("--basis", basis, "Kernel elements to test as a free basis");
  kab->callback([&] {
    action = [&] {
      FinitePresentation p;
      FiniteImageMap f;
      if (!preset.empty()) {
        p = preset == "b4prime" ? b4prime_presentation() : b3prime_presentation();
        f = preset == "b4prime" ? b4prime_image_map() : b3prime_image_map();
        if (!presentation_file.empty()) p = FinitePresentation::parse(read_file(presentation_file));
      } else {
        if (presentation_file.empty()) throw PreconditionError("give --preset or --presentation");
        if (degree < 1) throw PreconditionError("--degree is required with --presentation");
        p = FinitePresentation::parse(read_file(presentation_file));
        f = parse_images(p, images, degree);
      }
      const auto k = KernelAbelianization::compute(p, f);
      ordered_json j{{"index", k.index()},
                     {"schreier_generators", k.schreier_generator_count()},
                     {"invariant_factors", k.invariant_factors()}};
      std::string text = "index " + std::to_string(k.index()) + ", invariant factors [";
      for (std::size_t i = 0; i < k.invariant_factors().size(); ++i) {
        text += (i ? "," : "") + std::to_string(k.invariant_factors()[i]);
      }
      text += "]";
      int status = 0;
      if (!basis.empty()) {
        std::vector<FreeWord> elems;
        for (const auto& b : basis) elems.push_back(p.parse_word(b));
        const bool ok = basis_check(k, elems);
        j["basis"] = ok;
        text += ok ? "\nbasis: yes" : "\nbasis: no";
        status = ok ? 0 : 1;
      }
      emit(common, j, text);
      return status;
    };
  });

  std::string lambda, mu;
  int n_arg = 0;
  auto* ch = app.add_subcommand("char", "Irreducible character values of S_n");
  ch->add_option("--lambda", lambda, "Partition, e.g. 5,1")->required();
  ch->add_option("--class", mu, "Cycle type; all classes if omitted");
  ch->callback([&] {
    action = [&] {
      const Partition l = Partition::parse(lambda);
      ordered_json j = ordered_json::object();
      std::string text;
      std::vector<Partition> classes = mu.empty() ? partitions_of(l.size()) : std::vector<Partition>{Partition::parse(mu)};
      for (const auto& c : classes) {
        const long long v = character_value(l, c);
        j[c.to_string()] = v;
        text += "chi" + l.to_string() + c.to_string() + " = " + std::to_string(v) + "\n";
      }
      emit(common, j, text.substr(0, text.size() - 1));
      return 0;
    };
  });

  std::string module = "sym2-standard";
  auto* dec = app.add_subcommand("decompose", "Irreducible decomposition of a module character");
  dec->add_option("--module", module, "sym2-standard, sym2-vn11 or w");
  dec->add_option("--n", n_arg, "Degree n")->required();
  dec->callback([&] {
    action = [&] {
      const auto d = decompose(parse_module_target(module), n_arg);
      ordered_json j = ordered_json::object();
      std::string text;
      for (const auto& [p, m] : d) {
        j[p.to_string()] = m;
        text += (text.empty() ? "" : " ") + p.to_string() + ":" + std::to_string(m);
      }
      emit(common, j, text);
      return 0;
    };
  });

  std::string perm_text;
  auto* nu = app.add_subcommand("nu", "The exceptional automorphism of S_6");
  nu->add_option("--perm", perm_text, "Permutation of degree 6 in cycle notation");
  nu->callback([&] {
    action = [&] {
      if (!perm_text.empty()) {
        const Permutation img = nu_map(Permutation::from_cycles(6, perm_text));
        emit(common, {{"image", img.to_string()}}, img.to_string());
        return 0;
      }
      const NuReport r = verify_nu();
      emit(common,
           {{"elements", r.elements}, {"homomorphism", r.homomorphism}, {"bijective", r.bijective},
            {"preserves_transpositions", r.preserves_transpositions}},
           "elements " + std::to_string(r.elements) + ", homomorphism " + (r.homomorphism ? "yes" : "no") +
               ", bijective " + (r.bijective ? "yes" : "no") + ", inner " + (r.preserves_transpositions ? "yes" : "no"));
      return r.homomorphism && r.bijective ? 0 : 1;
    };
  });

  auto* k4 = app.add_subcommand("k4-rewrite", "Rewrite an element of K_4 in the free basis c, w");
  k4->add_option("word", w1)->required();
  k4->callback([&] {
    action = [&] {
      const FreeWord r = k4_rewrite(BraidWord::parse(w1));
      emit(common, {{"word", r.to_string(k4_names())}}, r.to_string(k4_names()));
      return 0;
    };
  });

  std::string automorphism;
  auto* pi = app.add_subcommand("pi", "Induced matrix on K_4^ab (braid) or on B'_3^ab (automorphism)");
  pi->add_option("word", w1, "Element of B'_4");
  pi->add_option("--automorphism", automorphism, "sigma1, sigma2 or lambda")
      ->check(CLI::IsMember({"sigma1", "sigma2", "lambda"}));
  pi->callback([&] {
    action = [&] {
      IntegerMatrix m;
      if (!automorphism.empty()) {
        const AutomorphismSpec a = automorphism == "lambda" ? AutomorphismSpec::lambda()
                                   : automorphism == "sigma1" ? AutomorphismSpec::sigma_tilde(1)
                                                              : AutomorphismSpec::sigma_tilde(2);
        m = b3prime_action_matrix(a);
      } else {
        if (w1.empty()) throw PreconditionError("give a braid word or --automorphism");
        m = k4_action_matrix(BraidWord::parse(w1));
      }
      emit(common, {{"matrix", m.to_rows()}}, matrix_text(m));
      return 0;
    };
  });

  std::string filter, override_file;
  bool list = false, timing = false;
  int threads = 1;
  auto* vp = app.add_subcommand("verify-paper", "Run the verification ledger");
  vp->add_option("--filter", filter, "Check id, id prefix, or glob");
  vp->add_flag("--list", list, "List check ids");
  vp->add_flag("--timing", timing, "Include timings in the report");
  vp->add_option("--threads", threads, "Worker threads");
  vp->add_option("--presentation-override", override_file, "Replacement B'4 presentation file");
  vp->callback([&] {
    action = [&] {
      if (list) {
        for (const auto& id : ledger_check_ids()) std::cout << id << "\n";
        return 0;
      }
      LedgerOptions o;
      if (!filter.empty()) o.filter = filter;
      o.seed = common.seed;
      o.threads = threads;
      if (!override_file.empty()) o.b4prime_presentation = read_file(override_file);
      const auto results = run_ledger(o);
      if (common.json) {
        std::cout << ledger_json(results, o.seed, timing);
      } else {
        for (const auto& r : results) {
          std::cout << (r.status == CheckStatus::Pass ? "PASS " : r.status == CheckStatus::Fail ? "FAIL " : "SKIP ")
                    << r.id;
          if (timing) std::cout << " (" << static_cast<long long>(r.elapsed_ms) << " ms)";
          std::cout << "\n  " << r.details << "\n";
          if (r.status == CheckStatus::Fail) std::cout << "  counterexample: " << r.counterexample << "\n";
        }
      }
      return all_passed(results) ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const StrandMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NotTubePreserving& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
