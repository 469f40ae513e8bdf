// Command-line front end: enumeration, order construction, Mobius queries,
// products, skew orders, verification suites, and export.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syt/hopf.hpp"
#include "syt/kl.hpp"
#include "syt/orders.hpp"
#include "syt/poset_io.hpp"
#include "syt/skew.hpp"

using nlohmann::ordered_json;
using syt::OrderKind;
using syt::Partition;
using syt::Poset;
using syt::Tableau;

namespace {

struct Common {
  int threads = 1;
  bool allow_big = false;
  bool json = false;
  std::string convention = "auto";
  std::string kl_cache;

  syt::OrderOptions order_options() const {
    syt::OrderOptions o;
    o.threads = threads;
    o.allow_big = allow_big;
    o.convention = syt::parse_convention(convention);
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "worker threads (results are identical for any value)");
  cmd->add_flag("--allow-big", c.allow_big, "allow long-running sizes (kl at n = 7, n = 8 posets)");
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_option("--kl-descent-convention", c.convention, "left|right|auto")
      ->check(CLI::IsMember({"left", "right", "auto"}));
  cmd->add_option("--kl-cache", c.kl_cache, "path for the binary KL table cache");
}

// rough upfront cost note for the sizes gated behind --allow-big
void print_cost_estimate(OrderKind kind, int n) {
  if (kind == OrderKind::kl && n == 7)
    std::cerr << "note: kl at n = 7 builds the full polynomial table over S_7 "
                 "(5040 permutations, ~4M Bruhat pairs); expect about a minute "
                 "and a few hundred MB at most\n";
  else if (n == 8)
    std::cerr << "note: n = 8 compares all 764 tableaux pairwise "
                 "(~580k comparisons); expect seconds\n";
}

// kl posets built through an optional on-disk table cache
const Poset& get_order_poset(OrderKind kind, int n, const Common& c) {
  auto opts = c.order_options();
  if ((n == 8 || (kind == OrderKind::kl && n == 7)) && c.allow_big)
    print_cost_estimate(kind, n);
  if (kind != OrderKind::kl || c.kl_cache.empty()) return syt::order_poset(kind, n, opts);
  if (n > 7) throw syt::error("BadRange", "kl order is limited to n <= 7");
  if (n == 7 && !c.allow_big)
    throw syt::error("AllowBigRequired", "kl at n = 7 needs --allow-big");
  static std::map<std::pair<int, int>, Poset> cached;
  auto conv = syt::resolve_kl_convention(opts.convention);
  auto key = std::make_pair(n, static_cast<int>(conv));
  auto it = cached.find(key);
  if (it != cached.end()) return it->second;
  std::ifstream in(c.kl_cache, std::ios::binary);
  if (in) {
    auto [table, file_conv] = syt::KlTable::load(in);
    (void)file_conv;
    if (table.n() != n)
      throw syt::error("InvalidCache", "cache holds n = " + std::to_string(table.n()) +
                                           ", requested n = " + std::to_string(n));
    return cached.emplace(key, syt::kl_order_on_tableaux(n, conv, &table)).first->second;
  }
  syt::KlTable table(n);
  std::ofstream out(c.kl_cache, std::ios::binary);
  if (!out) throw syt::error("BadRange", "cannot write KL cache to " + c.kl_cache);
  table.save(out, conv);
  return cached.emplace(key, syt::kl_order_on_tableaux(n, conv, &table)).first->second;
}

void emit(const std::string& text, const std::string& outfile) {
  if (outfile.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outfile, std::ios::binary);
  if (!out) throw syt::error("BadRange", "cannot open " + outfile);
  out << text;
}

ordered_json poset_summary(const Poset& p) {
  ordered_json j;
  j["elements"] = p.size();
  j["strict_pairs"] = p.relation_pairs().size();
  j["covers"] = p.covers().size();
  try {
    j["bottom"] = p.label(p.bottom());
    j["top"] = p.label(p.top());
    j["mobius_bottom_top"] = p.mobius(p.bottom(), p.top());
  } catch (const syt::error&) {
    j["bounded"] = false;
  }
  return j;
}

int run_enumerate(int n, const std::string& mu_text, const Common& c) {
  std::vector<Tableau> tabs = mu_text.empty()
                                  ? syt::enumerate_syt(n)
                                  : syt::enumerate_skew_syt(Partition::parse(mu_text), n);
  if (c.json) {
    ordered_json j;
    j["n"] = n;
    if (!mu_text.empty()) j["mu"] = mu_text;
    j["count"] = tabs.size();
    j["tableaux"] = ordered_json::array();
    for (const auto& t : tabs) j["tableaux"].push_back(t.str());
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& t : tabs) std::cout << t.str() << "\n";
    std::cerr << tabs.size() << " tableaux\n";
  }
  return 0;
}

int run_order(const std::string& type, int n, const std::string& fmt, const std::string& outfile,
              const Common& c) {
  if (type == "geom") {
    std::cout << "the geometric order has no builder here; it lies between kl and chain:\n";
    const Poset& k = get_order_poset(OrderKind::kl, n, c);
    const Poset& ch = get_order_poset(OrderKind::chain, n, c);
    std::cout << "  lower bound (kl):    " << k.relation_pairs().size() << " strict pairs\n";
    std::cout << "  upper bound (chain): " << ch.relation_pairs().size() << " strict pairs\n";
    return 0;
  }
  OrderKind kind = syt::parse_order_kind(type);
  if (n == 8 && !c.allow_big && kind != OrderKind::kl)
    throw syt::error("AllowBigRequired",
                     "n = 8 builds a 764-element poset; pass --allow-big to proceed");
  const Poset& p = get_order_poset(kind, n, c);
  if (!fmt.empty()) {
    emit(syt::export_poset(p, syt::parse_export_format(fmt)), outfile);
    return 0;
  }
  if (c.json) {
    ordered_json j = poset_summary(p);
    j["order"] = type;
    j["n"] = n;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << syt::order_name(kind) << " order on " << p.size() << " tableaux of size " << n
              << ": " << p.relation_pairs().size() << " strict pairs, " << p.covers().size()
              << " covers\n";
  }
  return 0;
}

int run_mobius(const std::string& type, int n, std::string from, std::string to, const Common& c) {
  const Poset& p = get_order_poset(syt::parse_order_kind(type), n, c);
  if (from.empty()) from = p.label(p.bottom());
  if (to.empty()) to = p.label(p.top());
  long long mu = p.mobius(from, to);
  if (c.json) {
    ordered_json j;
    j["order"] = type;
    j["n"] = n;
    j["from"] = from;
    j["to"] = to;
    j["mobius"] = mu;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "mu(" << from << ", " << to << ") = " << mu << "\n";
  }
  return 0;
}

int run_interval(const std::string& type, int n, const std::string& from, const std::string& to,
                 const std::string& fmt, const std::string& outfile, const Common& c) {
  const Poset& p = get_order_poset(syt::parse_order_kind(type), n, c);
  Poset iv = p.interval(from, to);
  if (!fmt.empty()) {
    emit(syt::export_poset(iv, syt::parse_export_format(fmt)), outfile);
    return 0;
  }
  std::vector<std::string> elems = iv.elements();
  std::sort(elems.begin(), elems.end());
  if (c.json) {
    ordered_json j;
    j["order"] = type;
    j["n"] = n;
    j["from"] = from;
    j["to"] = to;
    j["elements"] = elems;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& e : elems) std::cout << e << "\n";
    std::cerr << elems.size() << " elements in [" << from << ", " << to << "]\n";
  }
  return 0;
}

int run_product(const std::string& a, const std::string& b, const std::string& type,
                bool verify_interval, const Common& c) {
  Tableau t = Tableau::parse(a), s = Tableau::parse(b);
  auto prod = syt::pr_product(t, s);
  Tableau lo = syt::slash(t, s), hi = syt::backslash(t, s);
  if (c.json) {
    ordered_json j;
    j["t"] = t.str();
    j["s"] = s.str();
    j["slash"] = lo.str();
    j["backslash"] = hi.str();
    j["terms"] = ordered_json::array();
    for (const auto& x : prod.tableaux) j["terms"].push_back(x.str());
    j["shuffle_words"] = prod.words.size();
    if (verify_interval) {
      auto rep = syt::verify_product_interval(t, s, syt::parse_order_kind(type), c.order_options());
      j["interval_matches"] = rep.ok;
    }
    std::cout << j.dump() << "\n";
    if (verify_interval && !j["interval_matches"].get<bool>()) return 1;
    return 0;
  }
  std::cout << "T/S  = " << lo.str() << "\nT\\S  = " << hi.str() << "\n";
  std::cout << "T * S = ";
  for (std::size_t i = 0; i < prod.tableaux.size(); ++i)
    std::cout << (i ? " + " : "") << "(" << prod.tableaux[i].str() << ")";
  std::cout << "   [" << prod.words.size() << " shuffle words]\n";
  if (verify_interval) {
    auto rep = syt::verify_product_interval(t, s, syt::parse_order_kind(type), c.order_options());
    if (!rep.ok) {
      std::cout << "product does NOT match the interval [T/S, T\\S] under " << type << "\n";
      for (const auto& x : rep.product_only) std::cout << "  only in product:  " << x << "\n";
      for (const auto& x : rep.interval_only) std::cout << "  only in interval: " << x << "\n";
      return 1;
    }
    std::cout << "product equals the interval [T/S, T\\S] under " << type << "\n";
  }
  return 0;
}

int run_skew(const std::string& mu_text, int n, const std::string& base, const std::string& fmt,
             const std::string& outfile, bool show_mobius, const Common& c) {
  Partition mu = Partition::parse(mu_text);
  Poset p = syt::skew_order_poset(mu, n, syt::parse_order_kind(base), c.order_options());
  if (!fmt.empty()) {
    emit(syt::export_poset(p, syt::parse_export_format(fmt)), outfile);
    return 0;
  }
  if (c.json) {
    ordered_json j = poset_summary(p);
    j["mu"] = mu.str();
    j["n"] = n;
    j["base"] = base;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "skew order on " << p.size() << " tableaux (inner " << mu.str() << ", n = " << n
              << ", base " << base << ")\n";
    if (show_mobius)
      std::cout << "mu(0,1) = " << p.mobius(p.bottom(), p.top()) << "\n";
  }
  return 0;
}

// ----- verify subcommands: exit 0 when verified, 1 with a witness otherwise

int verify_mobius_top(const std::string& type, int n, const Common& c) {
  const Poset& p = get_order_poset(syt::parse_order_kind(type), n, c);
  long long mu = p.mobius(p.bottom(), p.top());
  long long expect = n % 2 ? 1 : -1;
  std::cout << "mu(0,1) = " << mu << " for " << type << " at n = " << n << ", expected "
            << expect << " = (-1)^(n-3): " << (mu == expect ? "OK" : "MISMATCH") << "\n";
  return mu == expect ? 0 : 1;
}

int verify_theorem_pr(int max_total, const Common& c) {
  int checked = 0;
  for (int k = 1; k < max_total; ++k)
    for (int l = 1; k + l <= max_total; ++l)
      for (const Tableau& a : syt::enumerate_syt(k))
        for (const Tableau& b : syt::enumerate_syt(l))
          for (OrderKind kind : {OrderKind::weak, OrderKind::kl, OrderKind::chain}) {
            auto rep = syt::verify_product_interval(a, b, kind, c.order_options());
            if (!rep.ok) {
              std::cout << "MISMATCH for " << a.str() << " * " << b.str() << " under "
                        << syt::order_name(kind) << "\n";
              return 1;
            }
            ++checked;
          }
  std::cout << "product equals the gluing interval for all " << checked
            << " (pair, order) combinations with total size <= " << max_total << "\n";
  return 0;
}

int verify_skew_mobius_cmd(const std::string& mu_text, int n, const std::string& base,
                           const Common& c) {
  auto show = [](const syt::SkewMobiusReport& rep) {
    std::cout << (rep.rectangular ? "rectangular " : "non-rectangular ") << rep.inner
              << ", n = " << rep.n << ", base " << syt::order_name(rep.base) << ": mu(0,1) = "
              << rep.computed << " (expected " << rep.expected << ") over " << rep.poset_size
              << " elements\n";
  };
  if (!mu_text.empty()) {
    Partition mu = Partition::parse(mu_text);
    auto kind = syt::parse_order_kind(base);
    auto rep = kind == OrderKind::kl
                   ? syt::verify_skew_mobius(mu, n, kind, c.order_options())
                   : syt::verify_skew_mobius(syt::superstandard(mu), n, kind, c.order_options());
    show(rep);
    return 0;
  }
  struct Inst {
    const char* mu;
    int n;
  };
  for (Inst inst : {Inst{"1", 2}, Inst{"1", 3}, Inst{"2,2", 2}, Inst{"2,1", 2}, Inst{"2,1", 3}})
    show(syt::verify_skew_mobius(syt::superstandard(Partition::parse(inst.mu)), inst.n,
                                 OrderKind::weak, c.order_options()));
  for (Inst inst : {Inst{"2,2", 2}, Inst{"2,1", 2}})
    show(syt::verify_skew_mobius(Partition::parse(inst.mu), inst.n, OrderKind::kl,
                                 c.order_options()));
  std::cout << "all skew mobius values follow the rectangle dichotomy\n";
  return 0;
}

int verify_sandwich(int n, const Common& c) {
  auto rep = syt::sandwich_report(n, c.order_options());
  std::cout << "weak (" << rep.weak_pairs << " pairs) <= kl (" << rep.kl_pairs
            << ") <= chain (" << rep.chain_pairs << ") at n = " << n << "\n";
  std::cout << "the geometric order lies between the kl and chain relation sets\n";
  if (!rep.kl_minus_weak.empty()) {
    std::cout << "kl \\ weak:\n";
    for (const auto& [a, b] : rep.kl_minus_weak) std::cout << "  (" << a << ") <= (" << b << ")\n";
  }
  if (!rep.chain_minus_kl.empty()) {
    std::cout << "chain \\ kl:\n";
    for (const auto& [a, b] : rep.chain_minus_kl) std::cout << "  (" << a << ") <= (" << b << ")\n";
  }
  return 0;
}

int verify_morphisms(int max_n, const Common& c) {
  for (int n = 2; n <= max_n; ++n)
    for (OrderKind kind : {OrderKind::weak, OrderKind::kl, OrderKind::chain}) {
      if (!syt::verify_descent_map(kind, n, c.order_options())) {
        std::cout << "descent map fails for " << syt::order_name(kind) << " at n = " << n << "\n";
        return 1;
      }
      const Poset& p = get_order_poset(kind, n, c);
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
          if (!p.leq(i, j)) continue;
          Tableau a = Tableau::parse(p.label(i)), b = Tableau::parse(p.label(j));
          if (!syt::opposite_dominance_leq(a.outer_shape(), b.outer_shape())) {
            std::cout << "shape map fails for " << syt::order_name(kind) << " at n = " << n << "\n";
            return 1;
          }
          if (!p.leq(syt::transpose(b).str(), syt::transpose(a).str())) {
            std::cout << "transpose fails for " << syt::order_name(kind) << " at n = " << n << "\n";
            return 1;
          }
          if (!p.leq(syt::evacuate(a).str(), syt::evacuate(b).str())) {
            std::cout << "evacuation fails for " << syt::order_name(kind) << " at n = " << n
                      << "\n";
            return 1;
          }
        }
    }
  std::cout << "descent and shape maps order-preserving, transpose order-reversing, "
               "evacuation order-preserving for weak/kl/chain up to n = "
            << max_n << "\n";
  return 0;
}

int verify_counterexamples(const Common& c) {
  int bad = 0;
  auto item = [&](const char* what, bool ok) {
    std::cout << (ok ? "OK   " : "FAIL ") << what << "\n";
    if (!ok) ++bad;
  };
  const Poset& c6 = get_order_poset(OrderKind::chain, 6, c);
  const Poset& w6 = get_order_poset(OrderKind::weak, 6, c);
  const Poset& c7 = get_order_poset(OrderKind::chain, 7, c);
  item("equal shapes can be strictly chain-comparable: (1 3 4|2 6|5) < (1 3 6|2 4|5)",
       c6.leq("1 3 4|2 6|5", "1 3 6|2 4|5") && !c6.leq("1 3 6|2 4|5", "1 3 4|2 6|5"));
  {
    Tableau ta = Tableau::parse("1 3 7|2 5|6"), sa = Tableau::parse("1 3 5|2 7|6");
    item("chain order drops a comparison after inserting the missing letter 4",
         c6.leq(syt::standardize(sa).str(), syt::standardize(ta).str()) &&
             !c7.leq(syt::insert_letter(sa, 4).str(), syt::insert_letter(ta, 4).str()));
  }
  item("dual Knuth translation at {4,5,6} breaks a chain comparison",
       c6.leq("1 3 4|2 6|5", "1 3 6|2 4|5") && !c6.leq("1 3 5|2 6|4", "1 3 5|2 4|6"));
  item("dual Knuth translation at {3,4,5} breaks a weak comparison",
       w6.leq("1 2 4|3 5 6", "1 2 4|3 6|5") && !w6.leq("1 2 3|4 5 6", "1 2 5|3 6|4"));
  item("replacing the inner tableau (1 2|3) by (1 3|2) breaks a chain comparison",
       c6.leq("1 2 5|3 4|6", "1 2 5|3 6|4") && !c6.leq("1 3 5|2 4|6", "1 3 5|2 6|4"));
  if (bad) return 1;
  std::cout << "all counterexamples reproduce\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orders, Mobius functions and products on standard Young tableaux"};
  app.require_subcommand(1);

  Common c;

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list standard or skew standard tableaux");
  int en_n = 4;
  std::string en_mu;
  enumerate->add_option("--n", en_n, "number of entries")->required();
  enumerate->add_option("--mu", en_mu, "inner shape for skew tableaux, e.g. 2,1");
  add_common(enumerate, c);

  // order
  auto* order = app.add_subcommand("order", "build one of the orders on SYT_n");
  std::string or_type = "weak", or_fmt, or_out;
  int or_n = 4;
  order->add_option("--type,--order", or_type, "weak|kl|chain|geom")->required();
  order->add_option("--n", or_n, "number of entries")->required();
  order->add_option("--export", or_fmt, "dot|json");
  order->add_option("-o,--output", or_out, "write the export to a file");
  add_common(order, c);

  // export (alias surface for order --export)
  auto* exp = app.add_subcommand("export", "serialize a poset as DOT or JSON");
  std::string ex_type = "weak", ex_fmt = "json", ex_out;
  int ex_n = 4;
  exp->add_option("--order", ex_type, "weak|kl|chain")->required();
  exp->add_option("--n", ex_n, "number of entries")->required();
  exp->add_option("--format", ex_fmt, "dot|json");
  exp->add_option("-o,--output", ex_out, "write to a file");
  add_common(exp, c);

  // mobius
  auto* mob = app.add_subcommand("mobius", "Mobius function of an order on SYT_n");
  std::string mo_type = "weak", mo_from, mo_to;
  int mo_n = 5;
  mob->add_option("--order", mo_type, "weak|kl|chain")->required();
  mob->add_option("--n", mo_n, "number of entries")->required();
  mob->add_option("--from", mo_from, "lower tableau (default: bottom)");
  mob->add_option("--to", mo_to, "upper tableau (default: top)");
  add_common(mob, c);

  // interval
  auto* iv = app.add_subcommand("interval", "interval [from, to] of an order on SYT_n");
  std::string iv_type = "weak", iv_from, iv_to, iv_fmt, iv_out;
  int iv_n = 5;
  iv->add_option("--order", iv_type, "weak|kl|chain")->required();
  iv->add_option("--n", iv_n, "number of entries")->required();
  iv->add_option("--from", iv_from, "lower tableau")->required();
  iv->add_option("--to", iv_to, "upper tableau")->required();
  iv->add_option("--export", iv_fmt, "dot|json");
  iv->add_option("-o,--output", iv_out, "write the export to a file");
  add_common(iv, c);

  // product
  auto* prod = app.add_subcommand("product", "product of two plactic classes");
  std::string pr_a, pr_b, pr_type = "weak";
  bool pr_verify = false;
  prod->add_option("t", pr_a, "first tableau, e.g. \"1 2|3\"")->required();
  prod->add_option("s", pr_b, "second tableau, e.g. \"1|2\"")->required();
  prod->add_option("--order", pr_type, "weak|kl|chain");
  prod->add_flag("--verify-interval", pr_verify, "check the product against [T/S, T\\S]");
  add_common(prod, c);

  // skew
  auto* skew = app.add_subcommand("skew", "skew order on SYT_n^mu (base must be kl)");
  std::string sk_mu, sk_base = "kl", sk_fmt, sk_out;
  int sk_n = 2;
  bool sk_mob = false;
  skew->add_option("--mu", sk_mu, "inner shape, e.g. 2,2")->required();
  skew->add_option("--n", sk_n, "entries in the skew part")->required();
  skew->add_option("--base", sk_base, "base order (kl)");
  skew->add_option("--export", sk_fmt, "dot|json");
  skew->add_option("-o,--output", sk_out, "write the export to a file");
  skew->add_flag("--mobius", sk_mob, "print mu(0,1)");
  add_common(skew, c);

  // verify
  auto* verify = app.add_subcommand("verify", "mechanical verification suites");
  verify->require_subcommand(1);
  auto* v_pr = verify->add_subcommand("theorem-pr", "products equal gluing intervals");
  int vpr_n = 6;
  v_pr->add_option("--n", vpr_n, "maximum total size (default 6)");
  add_common(v_pr, c);
  auto* v_mt = verify->add_subcommand("mobius-top", "mu(0,1) = (-1)^(n-3)");
  std::string vmt_type = "weak";
  int vmt_n = 5;
  v_mt->add_option("--order", vmt_type, "weak|kl|chain")->required();
  v_mt->add_option("--n", vmt_n, "number of entries")->required();
  add_common(v_mt, c);
  auto* v_sm = verify->add_subcommand("skew-mobius", "skew top Mobius dichotomy");
  std::string vsm_mu, vsm_base = "kl";
  int vsm_n = 2;
  v_sm->add_option("--mu", vsm_mu, "inner shape (omit to run the standard instances)");
  v_sm->add_option("--n", vsm_n, "entries in the skew part");
  v_sm->add_option("--base", vsm_base, "weak|kl|chain");
  add_common(v_sm, c);
  auto* v_sw = verify->add_subcommand("sandwich", "weak <= kl <= chain with differences");
  int vsw_n = 6;
  v_sw->add_option("--n", vsw_n, "number of entries")->required();
  add_common(v_sw, c);
  auto* v_mo = verify->add_subcommand("morphisms", "descent/shape/transpose/evacuation maps");
  int vmo_n = 6;
  v_mo->add_option("--n", vmo_n, "check all sizes up to this (default 6)");
  add_common(v_mo, c);
  auto* v_cx = verify->add_subcommand("counterexamples", "reproduce the known counterexamples");
  add_common(v_cx, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return run_enumerate(en_n, en_mu, c);
    if (*order) return run_order(or_type, or_n, or_fmt, or_out, c);
    if (*exp) return run_order(ex_type, ex_n, ex_fmt.empty() ? "json" : ex_fmt, ex_out, c);
    if (*mob) return run_mobius(mo_type, mo_n, mo_from, mo_to, c);
    if (*iv) return run_interval(iv_type, iv_n, iv_from, iv_to, iv_fmt, iv_out, c);
    if (*prod) return run_product(pr_a, pr_b, pr_type, pr_verify, c);
    if (*skew) return run_skew(sk_mu, sk_n, sk_base, sk_fmt, sk_out, sk_mob, c);
    if (*verify) {
      if (*v_pr) return verify_theorem_pr(vpr_n, c);
      if (*v_mt) return verify_mobius_top(vmt_type, vmt_n, c);
      if (*v_sm) return verify_skew_mobius_cmd(vsm_mu, vsm_n, vsm_base, c);
      if (*v_sw) return verify_sandwich(vsw_n, c);
      if (*v_mo) return verify_morphisms(vmo_n, c);
      if (*v_cx) return verify_counterexamples(c);
    }
  } catch (const syt::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    static const std::set<std::string> verification_kinds{
        "MobiusMismatch", "HypothesisFailed", "InclusionViolated", "CellMismatch",
        "IntervalMismatch"};
    return verification_kinds.count(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
