// rookrank: rank, unrank, count, enumerate and sample derangements and
// menage permutations in lexicographic order, plus a small Lyndon-word
// counting table.
//
// Exit codes: 0 success, 1 domain errors (index out of range, non-member
// word), 2 invalid arguments.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rookrank/rookrank.hpp"

using namespace rookrank;
using nlohmann::json;

namespace {

constexpr int kTableLengthMin = 8;   // detect_recurrence needs 2 * max_order terms
constexpr int kDefaultTableLength = 12;

const std::vector<std::string> kTablePrefixes{
    "0", "00", "01", "000", "001", "010", "011",
    "0000", "0001", "0010", "0011", "0101", "0110", "0111",
};

struct Options {
    std::string family;
    int n = 0;
    std::string index;
    std::string from;
    std::string to;
    std::string word;
    std::string prefix;
    bool prefix_given = false;
    std::uint64_t seed = 0;
    int count = 1;
    int length = kDefaultTableLength;
    bool json_mode = false;
};

template <typename Fn>
auto with_family(const Options& opt, Fn&& fn) {
    if (opt.family == "derangement") return fn(DerangementFamily(opt.n));
    return fn(MenageFamily(opt.n));
}

void emit_ok(const Options& opt, const json& result) {
    if (opt.json_mode) {
        std::cout << json{{"ok", true}, {"result", result}} << "\n";
    } else if (result.is_array()) {
        for (const auto& item : result) std::cout << item.get<std::string>() << "\n";
    } else {
        std::cout << result.get<std::string>() << "\n";
    }
}

std::string recurrence_text(const RecurrenceGuess& guess) {
    std::string rhs;
    for (int i = guess.order - 1; i >= 0; --i) {
        const int c = guess.coefficients[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!rhs.empty()) rhs += " + ";
        if (c > 1) rhs += std::to_string(c) + "*";
        rhs += i ? "a(n+" + std::to_string(i) + ")" : "a(n)";
    }
    if (rhs.empty()) rhs = "0";
    return "a(n+" + std::to_string(guess.order) + ") = " + rhs +
           " for n >= " + std::to_string(guess.valid_from);
}

int run_lyndon_table(const Options& opt) {
    std::vector<std::string> prefixes =
        opt.prefix_given ? std::vector<std::string>{opt.prefix} : kTablePrefixes;
    json rows = json::array();
    std::vector<std::string> lines;
    for (const std::string& prefix : prefixes) {
        std::vector<Count> counts;
        for (int len = 1; len <= opt.length; ++len)
            counts.push_back(count_lyndon_prefix(prefix, len));
        const std::vector<Count> euler = euler_transform(counts);
        const std::optional<RecurrenceGuess> guess = detect_recurrence(euler, 4, 1, opt.length);

        std::string counts_text, euler_text;
        json counts_json = json::array(), euler_json = json::array();
        for (const Count& c : counts) {
            if (!counts_text.empty()) counts_text += ' ';
            counts_text += c.str();
            counts_json.push_back(c.str());
        }
        for (const Count& c : euler) {
            if (!euler_text.empty()) euler_text += ' ';
            euler_text += c.str();
            euler_json.push_back(c.str());
        }
        const std::string recurrence =
            guess ? recurrence_text(*guess) : "no recurrence found (order <= 4, coefficients in {0,1,2})";
        lines.push_back(prefix + " | " + counts_text + " | " + euler_text + " | " + recurrence);

        json row{{"prefix", prefix}, {"counts", counts_json}, {"euler", euler_json}};
        if (guess)
            row["recurrence"] = json{{"order", guess->order},
                                     {"coefficients", guess->coefficients},
                                     {"valid_from", guess->valid_from}};
        else
            row["recurrence"] = nullptr;
        rows.push_back(std::move(row));
    }

    if (opt.json_mode) {
        std::cout << json{{"ok", true}, {"result", rows}} << "\n";
    } else {
        for (const std::string& line : lines) std::cout << line << "\n";
    }
    return 0;
}

int run_selftest(const Options& opt) {
    struct Check {
        std::string name;
        std::function<bool()> run;
    };
    const std::vector<Check> checks{
        {"derangement n=20 unrank 500000000000000000",
         [] {
             return to_text(unrank(DerangementFamily(20), Count(std::string("500000000000000000")))) ==
                    "12 14 2 9 13 20 6 3 1 17 5 11 19 15 10 18 8 7 4 16";
         }},
        {"derangement n=20 rank inverts the challenge word",
         [] {
             return rank(DerangementFamily(20),
                         parse_word(20, "12 14 2 9 13 20 6 3 1 17 5 11 19 15 10 18 8 7 4 16")) ==
                    Count(std::string("500000000000000000"));
         }},
        {"menage n=20 unrank 100000000000000000",
         [] {
             return to_text(unrank(MenageFamily(20), Count(std::string("100000000000000000")))) ==
                    "7 16 19 12 2 8 15 1 18 14 3 9 20 10 5 17 13 4 11 6";
         }},
        {"menage n=20 rank inverts the challenge word",
         [] {
             return rank(MenageFamily(20),
                         parse_word(20, "7 16 19 12 2 8 15 1 18 14 3 9 20 10 5 17 13 4 11 6")) ==
                    Count(std::string("100000000000000000"));
         }},
        {"menage n=20 total is 312400218671253762",
         [] { return total_count(MenageFamily(20)) == Count(std::string("312400218671253762")); }},
        {"derangement n=8 index 1000 is 2 5 4 8 7 3 6 1",
         [] { return to_text(unrank(DerangementFamily(8), Count(1000))) == "2 5 4 8 7 3 6 1"; }},
        {"menage n=8 index 1000 is 3 5 4 8 2 7 1 6",
         [] { return to_text(unrank(MenageFamily(8), Count(1000))) == "3 5 4 8 2 7 1 6"; }},
    };

    int failures = 0;
    json results = json::array();
    for (const Check& check : checks) {
        bool pass = false;
        try {
            pass = check.run();
        } catch (const std::exception&) {
            pass = false;
        }
        if (!pass) ++failures;
        if (opt.json_mode)
            results.push_back(json{{"name", check.name}, {"pass", pass}});
        else
            std::cout << (pass ? "PASS " : "FAIL ") << check.name << "\n";
    }
    if (opt.json_mode) std::cout << json{{"ok", failures == 0}, {"result", results}} << "\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank/unrank derangements and menage permutations in lexicographic order"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_mode, "wrap output as {\"ok\": ..., \"result\": ...}");

    const auto add_json = [&opt](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json_mode, "wrap output as {\"ok\": ..., \"result\": ...}");
    };
    const auto add_family = [&opt, &add_json](CLI::App* cmd) {
        add_json(cmd);
        cmd->add_option("--family", opt.family, "permutation family")
            ->required()
            ->check(CLI::IsMember({"derangement", "menage"}));
        cmd->add_option("--n", opt.n, "permutation length")->required()->check(CLI::PositiveNumber);
    };

    CLI::App* count = app.add_subcommand("count", "number of members");
    add_family(count);

    CLI::App* count_prefix = app.add_subcommand("count-prefix", "number of members with a prefix");
    add_family(count_prefix);
    count_prefix->add_option("--prefix", opt.prefix, "space-separated letters (may be empty)")
        ->required();

    CLI::App* rank_cmd = app.add_subcommand("rank", "1-based index of a member");
    add_family(rank_cmd);
    rank_cmd->add_option("--word", opt.word, "space-separated letters")->required();

    CLI::App* unrank_cmd = app.add_subcommand("unrank", "member at a 1-based index");
    add_family(unrank_cmd);
    unrank_cmd->add_option("--index", opt.index, "decimal index")->required();

    CLI::App* sample = app.add_subcommand("sample", "uniform random members, one per line");
    add_family(sample);
    sample->add_option("--seed", opt.seed, "random seed (default 0)");
    sample->add_option("--count", opt.count, "number of draws (default 1)")
        ->check(CLI::PositiveNumber);

    CLI::App* enumerate = app.add_subcommand("enumerate", "members from .. to, one per line");
    add_family(enumerate);
    enumerate->add_option("--from", opt.from, "decimal start index")->required();
    enumerate->add_option("--to", opt.to, "decimal end index")->required();

    CLI::App* lyndon = app.add_subcommand(
        "lyndon-table", "Lyndon prefix counts, Euler transforms and conjectured recurrences");
    add_json(lyndon);
    lyndon->add_option("--prefix", opt.prefix, "single binary prefix (default: built-in table)")
        ->each([&opt](const std::string&) { opt.prefix_given = true; });
    lyndon->add_option("--count", opt.length, "row length (default 12)")
        ->check(CLI::Range(kTableLengthMin, lyndon_length_limit));

    CLI::App* selftest = app.add_subcommand("selftest", "run the embedded golden vectors");
    add_json(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) {
            emit_ok(opt, with_family(opt, [](const auto& f) { return total_count(f).str(); }));
        } else if (count_prefix->parsed()) {
            emit_ok(opt, with_family(opt, [&opt](const auto& f) {
                        return f.count_prefix(parse_word(opt.n, opt.prefix)).str();
                    }));
        } else if (rank_cmd->parsed()) {
            emit_ok(opt, with_family(opt, [&opt](const auto& f) {
                        return rank(f, parse_word(opt.n, opt.word)).str();
                    }));
        } else if (unrank_cmd->parsed()) {
            emit_ok(opt, with_family(opt, [&opt](const auto& f) {
                        return to_text(unrank(f, Count(opt.index)));
                    }));
        } else if (sample->parsed()) {
            json words = json::array();
            with_family(opt, [&opt, &words](const auto& f) {
                for (const Word& w : sample_uniform(f, opt.seed, opt.count))
                    words.push_back(to_text(w));
                return 0;
            });
            emit_ok(opt, words);
        } else if (enumerate->parsed()) {
            json words = json::array();
            with_family(opt, [&opt, &words](const auto& f) {
                enumerate_range(f, Count(opt.from), Count(opt.to),
                                [&words](const Word& w) { words.push_back(to_text(w)); });
                return 0;
            });
            emit_ok(opt, words);
        } else if (lyndon->parsed()) {
            return run_lyndon_table(opt);
        } else if (selftest->parsed()) {
            return run_selftest(opt);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        if (opt.json_mode)
            std::cout << json{{"ok", false}, {"error", ex.what()}} << "\n";
        else
            std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
