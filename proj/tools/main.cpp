// Command line front end: universality index, edit distances to the
// k-universal class, witness construction and verification, oracle sweeps,
// generators and timing.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kuniv/distances.hpp"
#include "kuniv/oracle.hpp"
#include "kuniv/witness.hpp"

using namespace kuniv;
using nlohmann::json;

namespace {

// ---- input decoding --------------------------------------------------------

std::vector<Symbol> decode_utf8(const std::string& text) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  auto cont = [&](std::size_t j) { return j < text.size() && (text[j] & 0xC0) == 0x80; };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      out.push_back(c);
      i += 1;
    } else if ((c & 0xE0) == 0xC0 && cont(i + 1)) {
      out.push_back(((c & 0x1F) << 6) | (text[i + 1] & 0x3F));
      i += 2;
    } else if ((c & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
      out.push_back(((c & 0x0F) << 12) | ((text[i + 1] & 0x3F) << 6) | (text[i + 2] & 0x3F));
      i += 3;
    } else if ((c & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
      out.push_back(((c & 0x07) << 18) | ((text[i + 1] & 0x3F) << 12) |
                    ((text[i + 2] & 0x3F) << 6) | (text[i + 3] & 0x3F));
      i += 4;
    } else {
      throw std::invalid_argument("invalid UTF-8 input");
    }
  }
  return out;
}

std::string encode_utf8(const std::vector<Symbol>& symbols) {
  std::string out;
  for (Symbol s : symbols) {
    if (s < 0 || s > 0x10FFFF) throw std::invalid_argument("symbol is not a Unicode scalar");
    auto v = static_cast<std::uint32_t>(s);
    if (v < 0x80) {
      out.push_back(static_cast<char>(v));
    } else if (v < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (v >> 6)));
      out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else if (v < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (v >> 12)));
      out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (v >> 18)));
      out.push_back(static_cast<char>(0x80 | ((v >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    }
  }
  return out;
}

struct InputSpec {
  std::string word;   // positional
  std::string file;   // --file
  bool ints = false;  // --ints
};

std::string slurp(const InputSpec& in) {
  if (!in.word.empty() && !in.file.empty())
    throw std::invalid_argument("give the word either inline or via --file, not both");
  if (!in.file.empty()) {
    std::ifstream f(in.file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + in.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  if (!in.word.empty()) return in.word;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

std::vector<Symbol> parse_symbols(const InputSpec& in) {
  std::string raw = slurp(in);
  if (in.ints) {
    std::vector<Symbol> out;
    std::istringstream ss(raw);
    Symbol v;
    while (ss >> v) out.push_back(v);
    if (!ss.eof()) throw std::invalid_argument("integer input contains a non-integer token");
    return out;
  }
  while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.pop_back();
  return decode_utf8(raw);
}

std::string render(const std::vector<Symbol>& symbols, bool ints) {
  if (!ints) return encode_utf8(symbols);
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(symbols[i]);
  }
  return out;
}

EditOp parse_op(const std::string& name) {
  if (name == "insert") return EditOp::Insert;
  if (name == "delete") return EditOp::Delete;
  if (name == "subst" || name == "substitute") return EditOp::Substitute;
  throw std::invalid_argument("--op must be insert, delete, or subst");
}

json base_json(EditOp op, const BigUint& k, const Word& w) {
  auto arch = arch_factorize(w);
  json j;
  j["op"] = to_string(op);
  j["k"] = k.to_string();
  j["iota"] = arch.iota;
  j["arch_ends"] = arch.arch_ends;
  return j;
}

// exit codes: 0 ok, 1 usage/verification errors, 2 infeasible targets
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edit distances to the class of k-subsequence-universal words"};
  app.require_subcommand(1);

  InputSpec in;
  std::string op_name = "insert";
  std::string k_text = "0";
  bool json_out = false;
  bool force_generic = false;

  auto add_word_opts = [&](CLI::App* cmd) {
    cmd->add_option("word", in.word, "input word (UTF-8 text)");
    cmd->add_option("--file", in.file, "read the word from a file");
    cmd->add_flag("--ints", in.ints, "input is whitespace-separated integer letters");
    cmd->add_flag("--json", json_out, "machine-readable output");
  };

  auto* cmd_index = app.add_subcommand("index", "universality index and arch factorization");
  add_word_opts(cmd_index);

  auto* cmd_dist = app.add_subcommand("dist", "minimal edit count to reach index k");
  add_word_opts(cmd_dist);
  cmd_dist->add_option("-k", k_text, "target universality index")->required();
  cmd_dist->add_option("--op", op_name, "insert | delete | subst")->required();
  cmd_dist->add_flag("--force-generic", force_generic, "disable the binary insertion fast path");

  auto* cmd_wit = app.add_subcommand("witness", "construct a closest k-universal word");
  add_word_opts(cmd_wit);
  cmd_wit->add_option("-k", k_text, "target universality index")->required();
  cmd_wit->add_option("--op", op_name, "insert | delete | subst")->required();

  std::string witness_text;
  auto* cmd_verify = app.add_subcommand("verify", "check a claimed witness");
  add_word_opts(cmd_verify);
  cmd_verify->add_option("witness", witness_text, "claimed witness word")->required();
  cmd_verify->add_option("-k", k_text, "target universality index")->required();
  cmd_verify->add_option("--op", op_name, "insert | delete | subst")->required();

  int check_max_n = 7, check_sigma = 2, bfs_limit = 4;
  auto* cmd_check = app.add_subcommand("oracle-check", "exhaustive fast-vs-oracle sweep");
  cmd_check->add_option("--max-n", check_max_n, "maximum word length");
  cmd_check->add_option("--sigma", check_sigma, "alphabet size");
  cmd_check->add_option("--bfs-limit", bfs_limit, "search cross-check depth bound");

  int gen_n = 20, gen_sigma = 3;
  std::uint64_t gen_seed = 1;
  auto* cmd_gen = app.add_subcommand("gen", "generate a random word");
  cmd_gen->add_option("--n", gen_n, "length");
  cmd_gen->add_option("--sigma", gen_sigma, "alphabet size");
  cmd_gen->add_option("--seed", gen_seed, "random seed");
  cmd_gen->add_flag("--ints", in.ints, "emit integer letters");

  int bench_n = 100000, bench_sigma = 26;
  std::int64_t bench_k = 50;
  std::uint64_t bench_seed = 1;
  auto* cmd_bench = app.add_subcommand("bench", "timing report for the three distances");
  cmd_bench->add_option("--n", bench_n, "length");
  cmd_bench->add_option("--sigma", bench_sigma, "alphabet size");
  cmd_bench->add_option("--k", bench_k, "target index");
  cmd_bench->add_option("--seed", bench_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_index->parsed()) {
      auto symbols = parse_symbols(in);
      auto [w, map] = normalize(symbols);
      auto arch = arch_factorize(w);
      std::vector<Letter> rest(w.letters().begin() + (arch.rest_start - 1), w.letters().end());
      if (json_out) {
        json j;
        j["iota"] = arch.iota;
        j["arch_ends"] = arch.arch_ends;
        j["rest"] = render(restore(rest, map), in.ints);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "iota " << arch.iota << "\narch_ends [";
        for (std::size_t i = 0; i < arch.arch_ends.size(); ++i)
          std::cout << (i ? "," : "") << arch.arch_ends[i];
        std::cout << "]\nrest " << render(restore(rest, map), in.ints) << '\n';
      }
      return 0;
    }

    if (cmd_dist->parsed()) {
      auto symbols = parse_symbols(in);
      auto [w, map] = normalize(symbols);
      EditOp op = parse_op(op_name);
      BigUint k = BigUint::from_string(k_text);
      DistanceOptions opts;
      opts.force_generic = force_generic;
      DistanceResult res = distance(w, k, op, opts);
      if (json_out) {
        json j = base_json(op, k, w);
        j["cost"] = res.cost.to_string();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "cost " << res.cost.to_string() << '\n';
      }
      return 0;
    }

    if (cmd_wit->parsed()) {
      auto symbols = parse_symbols(in);
      auto [w, map] = normalize(symbols);
      EditOp op = parse_op(op_name);
      BigUint k = BigUint::from_string(k_text);
      if (op == EditOp::Insert && k > BigUint(static_cast<std::uint64_t>(w.n()))) {
        // the witness may be far larger than memory; stream it
        DistanceResult res = distance(w, k, op);
        if (json_out) {
          json j = base_json(op, k, w);
          j["cost"] = res.cost.to_string();
          std::cout << j.dump() << '\n';  // witness follows on the next line
        } else {
          std::cout << "cost " << res.cost.to_string() << "\nwitness ";
        }
        bool first = true;
        insert_witness_stream(w, k, [&](std::span<const Letter> chunk) {
          std::vector<Letter> copy(chunk.begin(), chunk.end());
          if (in.ints && !first) std::cout << ' ';
          std::cout << render(restore(copy, map), in.ints);
          first = false;
        });
        std::cout << '\n';
        return 0;
      }
      std::int64_t kk = static_cast<std::int64_t>(k.to_u64());
      WitnessResult res;
      switch (op) {
        case EditOp::Insert: res = insert_witness(w, kk); break;
        case EditOp::Delete: res = delete_witness(w, kk); break;
        case EditOp::Substitute: res = subst_witness(w, kk); break;
      }
      std::string rendered = render(restore(res.word, map), in.ints);
      if (json_out) {
        json j = base_json(op, k, w);
        j["cost"] = BigUint(static_cast<std::uint64_t>(res.cost)).to_string();
        j["witness"] = rendered;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "cost " << res.cost << "\nwitness " << rendered << '\n';
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto symbols = parse_symbols(in);
      auto [w, map] = normalize(symbols);
      EditOp op = parse_op(op_name);
      BigUint k = BigUint::from_string(k_text);
      InputSpec win;
      win.word = witness_text;
      win.ints = in.ints;
      auto wit_symbols = parse_symbols(win);
      std::vector<Letter> wit_letters;
      bool alphabet_ok = true;
      for (Symbol s : wit_symbols) {
        auto it = std::lower_bound(map.forward.begin(), map.forward.end(), s);
        if (it == map.forward.end() || *it != s) {
          alphabet_ok = false;
          break;
        }
        wit_letters.push_back(static_cast<Letter>(it - map.forward.begin()) + 1);
      }
      VerifyReport rep;
      if (!alphabet_ok) rep.reason = "witness uses a letter outside the word's alphabet";
      else rep = verify_witness(w, k, op, wit_letters);
      if (json_out) {
        json j = base_json(op, k, w);
        j["valid"] = rep.ok;
        j["cost"] = rep.edit_count.to_string();
        if (!rep.ok) j["reason"] = rep.reason;
        std::cout << j.dump() << '\n';
      } else if (rep.ok) {
        std::cout << "valid, cost " << rep.edit_count.to_string() << '\n';
      } else {
        std::cout << "invalid: " << rep.reason << '\n';
      }
      return rep.ok ? 0 : kExitUsage;
    }

    if (cmd_check->parsed()) {
      auto stats = oracle::exhaustive_check(check_max_n, check_sigma, bfs_limit, &std::cerr);
      std::cout << "words " << stats.words << ", checks " << stats.checks << ", search checks "
                << stats.bfs_checks << ", mismatches " << stats.mismatches << '\n';
      return stats.mismatches == 0 ? 0 : kExitUsage;
    }

    if (cmd_gen->parsed()) {
      if (gen_sigma < 1 || gen_n < gen_sigma) throw std::invalid_argument("need n >= sigma >= 1");
      std::mt19937_64 rng(gen_seed);
      std::vector<Letter> letters(static_cast<std::size_t>(gen_n));
      std::uniform_int_distribution<int> pick(1, gen_sigma);
      for (auto& a : letters) a = static_cast<Letter>(pick(rng));
      std::vector<int> order(static_cast<std::size_t>(gen_n));
      for (int i = 0; i < gen_n; ++i) order[static_cast<std::size_t>(i)] = i;
      std::shuffle(order.begin(), order.end(), rng);
      for (int a = 1; a <= gen_sigma; ++a)
        letters[static_cast<std::size_t>(order[static_cast<std::size_t>(a) - 1])] =
            static_cast<Letter>(a);
      std::vector<Symbol> symbols;
      for (Letter a : letters)
        symbols.push_back(in.ints ? static_cast<Symbol>(a) : static_cast<Symbol>('a' + a - 1));
      std::cout << render(symbols, in.ints) << '\n';
      return 0;
    }

    if (cmd_bench->parsed()) {
      std::mt19937_64 rng(bench_seed);
      std::vector<Letter> letters(static_cast<std::size_t>(bench_n));
      std::uniform_int_distribution<int> pick(1, bench_sigma);
      for (auto& a : letters) a = static_cast<Letter>(pick(rng));
      for (int a = 1; a <= bench_sigma; ++a)
        letters[static_cast<std::size_t>(a) - 1] = static_cast<Letter>(a);
      Word w = Word::from_letters(std::move(letters), bench_sigma);
      std::cout << "n " << bench_n << ", sigma " << bench_sigma << ", k " << bench_k << ", iota "
                << universality_index(w) << '\n';
      auto run = [&](const char* name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << name << " " << el << "s\n";
      };
      run("insert", [&] { (void)insert_distance(w, bench_k); });
      run("delete", [&] {
        (void)delete_distance(w, std::min<std::int64_t>(bench_k, universality_index(w)));
      });
      run("subst", [&] {
        (void)subst_distance(w, std::min<std::int64_t>(bench_k, w.n() / w.sigma()));
      });
      return 0;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
