#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exactlab/algebra_spec.hpp"
#include "exactlab/exact_structure.hpp"
#include "exactlab/ideal.hpp"
#include "exactlab/json_io.hpp"
#include "exactlab/kronecker.hpp"
#include "exactlab/rational.hpp"
#include "exactlab/verify_suites.hpp"

namespace {

using exactlab::Json;

[[noreturn]] void fail(const std::string& kind, const std::string& message, int code,
                       Json extra = Json::object()) {
    Json err{{"error", Json{{"kind", kind}, {"message", message}}}};
    for (auto it = extra.begin(); it != extra.end(); ++it) err["error"][it.key()] = it.value();
    std::cout << err.dump(2) << "\n";
    std::exit(code);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io", "cannot read file: " + path, 2);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        fail("parse", "invalid JSON in " + path + ": " + e.what(), 2);
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --- ideal expression grammar -------------------------------------------
//   expr    := inter ('+' inter)*
//   inter   := prod ('&' prod)*
//   prod    := post ('*' post)*
//   post    := prim ('^' exponent)*
//   prim    := 'rad' | 'add{id,...}' | 'gen(path)' | '(' expr ')'
//   exponent:= number | 'w' | '(' ['w' ['*' q]] ['+' r] ')'

struct Token {
    enum Kind { LParen, RParen, Star, Plus, Amp, Caret, Rad, Add, Gen, Number, Omega } kind;
    std::string text;  // ids for Add, path for Gen, digits for Number
};

std::vector<Token> lex_ideal_expr(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto read_until = [&](char open, char close) {
        if (i >= s.size() || s[i] != open)
            throw std::invalid_argument(std::string("expected '") + open +
                                        "' in ideal expression");
        const std::size_t start = ++i;
        while (i < s.size() && s[i] != close) ++i;
        if (i >= s.size())
            throw std::invalid_argument(std::string("missing '") + close +
                                        "' in ideal expression");
        return s.substr(start, i++ - start);
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            out.push_back({Token::LParen, "("});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::RParen, ")"});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, "*"});
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Plus, "+"});
            ++i;
        } else if (c == '&') {
            out.push_back({Token::Amp, "&"});
            ++i;
        } else if (c == '^') {
            out.push_back({Token::Caret, "^"});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i)});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            const std::string word = s.substr(i, j - i);
            i = j;
            if (word == "rad") {
                out.push_back({Token::Rad, word});
            } else if (word == "w") {
                out.push_back({Token::Omega, word});
            } else if (word == "add") {
                out.push_back({Token::Add, read_until('{', '}')});
            } else if (word == "gen") {
                out.push_back({Token::Gen, read_until('(', ')')});
            } else {
                throw std::invalid_argument("unknown word in ideal expression: '" + word + "'");
            }
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in ideal expression");
        }
    }
    return out;
}

class IdealExprParser {
  public:
    IdealExprParser(const exactlab::ARQuiver& ar, std::vector<Token> toks)
        : ar_(ar), toks_(std::move(toks)) {}

    exactlab::Ideal parse() {
        exactlab::Ideal out = parse_sum();
        if (pos_ != toks_.size())
            throw std::invalid_argument("trailing input in ideal expression");
        return out;
    }

  private:
    bool at(Token::Kind k) const { return pos_ < toks_.size() && toks_[pos_].kind == k; }
    const Token& take() {
        if (pos_ >= toks_.size())
            throw std::invalid_argument("unexpected end of ideal expression");
        return toks_[pos_++];
    }

    exactlab::Ideal parse_sum() {
        exactlab::Ideal out = parse_intersection();
        while (at(Token::Plus)) {
            take();
            out = exactlab::ideal_sum(out, parse_intersection());
        }
        return out;
    }

    exactlab::Ideal parse_intersection() {
        exactlab::Ideal out = parse_product();
        while (at(Token::Amp)) {
            take();
            out = exactlab::ideal_intersect(out, parse_product());
        }
        return out;
    }

    exactlab::Ideal parse_product() {
        exactlab::Ideal out = parse_postfix();
        while (at(Token::Star)) {
            take();
            // "A * B" composes A after B.
            out = exactlab::ideal_product(out, parse_postfix());
        }
        return out;
    }

    exactlab::Ideal parse_postfix() {
        exactlab::Ideal out = parse_primary();
        while (at(Token::Caret)) {
            take();
            out = exactlab::ordinal_power(out, parse_exponent());
        }
        return out;
    }

    exactlab::OrdinalExpr parse_exponent() {
        if (at(Token::Number)) return {0, std::stoi(take().text)};
        if (at(Token::Omega)) {
            take();
            return {1, 0};
        }
        if (!at(Token::LParen))
            throw std::invalid_argument("expected an exponent after '^'");
        take();
        exactlab::OrdinalExpr e{0, 0};
        if (at(Token::Omega)) {
            take();
            e.omega_coeff = 1;
            if (at(Token::Star)) {
                take();
                if (!at(Token::Number))
                    throw std::invalid_argument("expected a number after 'w*'");
                e.omega_coeff = std::stoi(take().text);
            }
            if (at(Token::Plus)) {
                take();
                if (!at(Token::Number))
                    throw std::invalid_argument("expected a number after '+'");
                e.finite_part = std::stoi(take().text);
            }
        } else if (at(Token::Number)) {
            e.finite_part = std::stoi(take().text);
        } else {
            throw std::invalid_argument("malformed exponent");
        }
        if (!at(Token::RParen)) throw std::invalid_argument("missing ')' in exponent");
        take();
        return e;
    }

    exactlab::Ideal parse_primary() {
        if (at(Token::Rad)) {
            take();
            return exactlab::radical_ideal(ar_);
        }
        if (at(Token::Add)) {
            const std::string ids = take().text;
            std::vector<int> units;
            std::istringstream in(ids);
            std::string id;
            while (std::getline(in, id, ',')) {
                id.erase(std::remove_if(id.begin(), id.end(), ::isspace), id.end());
                if (!id.empty()) units.push_back(ar_.index_of(id));
            }
            return exactlab::ideal_from_add(ar_, units);
        }
        if (at(Token::Gen)) {
            const std::string path = take().text;
            const Json j = parse_json_file(path);
            if (!j.contains("generators") || !j.at("generators").is_array())
                throw std::invalid_argument("generator file needs a 'generators' array");
            std::vector<exactlab::MorphismRep> gens;
            for (const Json& g : j.at("generators")) {
                exactlab::MorphismRep f{
                    exactlab::rep_from_json(ar_.quiver(), g.at("source")),
                    exactlab::rep_from_json(ar_.quiver(), g.at("target")),
                    {}};
                for (const Json& m : g.at("components"))
                    f.components.push_back(exactlab::matrix_from_json(m));
                if (!exactlab::is_valid_morphism(f))
                    throw std::invalid_argument("generator is not a morphism");
                gens.push_back(std::move(f));
            }
            return exactlab::ideal_generate(ar_, gens);
        }
        if (at(Token::LParen)) {
            take();
            exactlab::Ideal out = parse_sum();
            if (!at(Token::RParen))
                throw std::invalid_argument("missing ')' in ideal expression");
            take();
            return out;
        }
        throw std::invalid_argument("expected rad, add{...}, gen(...) or '('");
    }

    const exactlab::ARQuiver& ar_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::vector<exactlab::KLabel> parse_label_list(const std::string& text) {
    std::vector<exactlab::KLabel> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        if (tok == "inf")
            out.push_back(exactlab::k_label_infinity());
        else
            out.push_back(exactlab::k_label(exactlab::rational_from_string(tok)));
    }
    return out;
}

exactlab::KIdealFamily parse_family(const std::string& text) {
    using F = exactlab::KIdealFamily;
    if (text == "radP") return {F::RadP, {}, {}};
    if (text == "radQ") return {F::RadQ, {}, {}};
    if (text == "radOmegaPlusOne") return {F::RadOmegaPlusOne, {}, {}};
    if (text.rfind("radRS{", 0) == 0 && text.back() == '}')
        return {F::RadRS, parse_label_list(text.substr(6, text.size() - 7)), {}};
    if (text.rfind("ist{", 0) == 0 && text.back() == '}') {
        const std::string inner = text.substr(4, text.size() - 5);
        const std::size_t semi = inner.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("ist family needs 'ist{S;T}'");
        return {F::IST, parse_label_list(inner.substr(0, semi)),
                parse_label_list(inner.substr(semi + 1))};
    }
    throw std::invalid_argument("unknown closed-set family: " + text);
}

exactlab::ARQuiver knit_dynkin(const exactlab::AlgebraSpec& spec) {
    if (spec.kind != exactlab::AlgebraSpec::Kind::Dynkin)
        fail("usage", "this subcommand requires a dynkin algebra spec", 2);
    return exactlab::ARQuiver::knit(spec.quiver);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exactlab: exact structures on module categories of "
                 "representation-finite quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string spec_path;
    app.add_option("--spec", spec_path, "algebra specification file")->required();

    exactlab::SuiteOptions opts;
    app.add_option("--seed", opts.seed, "sampling seed");
    app.add_option("--samples", opts.axiom_samples, "axiom suite sample count");
    app.add_option("--corpus", opts.corpus_size, "ideal corpus size");
    app.add_option("--rounds", opts.tau_rounds, "translate roundtrip count");

    CLI::App* sc_indecs = app.add_subcommand("indecs", "list the indecomposables");
    CLI::App* sc_ar = app.add_subcommand("ar", "emit the AR quiver");
    bool want_dot = false;
    sc_ar->add_flag("--dot", want_dot, "emit GraphViz DOT instead of JSON");
    CLI::App* sc_enum = app.add_subcommand("enumerate", "enumerate all exact structures");
    CLI::App* sc_generate =
        app.add_subcommand("generate", "generate the structure of given conflations");
    std::vector<std::string> conflation_files;
    sc_generate->add_option("--conflation", conflation_files, "conflation JSON file")
        ->required();
    CLI::App* sc_relext = app.add_subcommand("relext", "relative Ext table of a structure");
    std::string structure_list;
    bool want_csv = false;
    sc_relext
        ->add_option("--structure", structure_list,
                     "closed set as comma-separated ids (must contain the injectives)")
        ->required();
    sc_relext->add_flag("--csv", want_csv, "emit CSV instead of JSON");
    CLI::App* sc_ideal = app.add_subcommand("ideal", "evaluate an ideal expression");
    std::string ideal_expr;
    sc_ideal->add_option("expr", ideal_expr, "expression over rad, add{...}, gen(...)")
        ->required();
    CLI::App* sc_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name;
    sc_verify->add_option("suite", suite_name, "suite token")->required();
    CLI::App* sc_kron = app.add_subcommand("kron", "Kronecker-specific queries");
    std::string kron_action;
    std::string kron_family;
    sc_kron->add_option("action", kron_action, "closedset")->required();
    sc_kron->add_option("family", kron_family, "ideal family token")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("usage", e.what(), 2);
    }

    try {
        const exactlab::AlgebraSpec spec = exactlab::parse_spec(read_file(spec_path));

        if (sc_indecs->parsed()) {
            emit(exactlab::json_of_indecs(knit_dynkin(spec)));
        } else if (sc_ar->parsed()) {
            const exactlab::ARQuiver ar = knit_dynkin(spec);
            if (want_dot) {
                std::cout << exactlab::ar_quiver_dot(ar);
            } else {
                Json arrows = Json::array();
                for (const exactlab::ARArrowInfo& a : ar.arrows())
                    arrows.push_back(Json{{"from", ar.indec(a.source).id},
                                          {"to", ar.indec(a.target).id}});
                Json seqs = Json::array();
                for (const exactlab::ARSequence& s : ar.sequences()) {
                    Json mid = Json::array();
                    for (int m : s.middle) mid.push_back(ar.indec(m).id);
                    seqs.push_back(Json{{"start", ar.indec(s.start).id},
                                        {"middle", std::move(mid)},
                                        {"end", ar.indec(s.end).id}});
                }
                emit(Json{{"algebra", ar.type_label()},
                          {"arrows", std::move(arrows)},
                          {"sequences", std::move(seqs)}});
            }
        } else if (sc_enum->parsed()) {
            const exactlab::ARQuiver ar = knit_dynkin(spec);
            const std::vector<exactlab::ExactStructure> all = exactlab::enumerate_all(ar);
            Json list = Json::array();
            for (const exactlab::ExactStructure& e : all)
                list.push_back(exactlab::json_of_closed_set(ar, e.closed_set));
            emit(Json{{"algebra", ar.type_label()},
                      {"count", all.size()},
                      {"structures", std::move(list)}});
        } else if (sc_generate->parsed()) {
            const exactlab::ARQuiver ar = knit_dynkin(spec);
            std::vector<exactlab::Conflation> confs;
            for (const std::string& path : conflation_files)
                confs.push_back(
                    exactlab::conflation_from_json(ar.quiver(), parse_json_file(path)));
            emit(exactlab::json_of_structure(ar, exactlab::generate(ar, confs)));
        } else if (sc_relext->parsed()) {
            const exactlab::ARQuiver ar = knit_dynkin(spec);
            std::vector<int> closed;
            std::istringstream in(structure_list);
            std::string id;
            while (std::getline(in, id, ',')) {
                id.erase(std::remove_if(id.begin(), id.end(), ::isspace), id.end());
                if (!id.empty()) closed.push_back(ar.index_of(id));
            }
            exactlab::ExactStructure e{exactlab::normalize_closed_set(ar, closed), {}};
            if (want_csv) {
                std::cout << "x,y,dim\n";
                for (int x = 0; x < ar.count(); ++x)
                    for (int y = 0; y < ar.count(); ++y)
                        std::cout << ar.indec(x).id << "," << ar.indec(y).id << ","
                                  << exactlab::rel_ext(ar, e, x, y).dim() << "\n";
            } else {
                Json table = Json::array();
                for (int x = 0; x < ar.count(); ++x)
                    for (int y = 0; y < ar.count(); ++y)
                        table.push_back(Json{{"x", ar.indec(x).id},
                                             {"y", ar.indec(y).id},
                                             {"dim", exactlab::rel_ext(ar, e, x, y).dim()}});
                emit(Json{{"algebra", ar.type_label()},
                          {"structure-U", exactlab::json_of_closed_set(ar, e.closed_set)},
                          {"table", std::move(table)}});
            }
        } else if (sc_ideal->parsed()) {
            const exactlab::ARQuiver ar = knit_dynkin(spec);
            IdealExprParser parser(ar, lex_ideal_expr(ideal_expr));
            emit(exactlab::json_of_ideal(parser.parse()));
        } else if (sc_verify->parsed()) {
            const exactlab::SuiteResult res = exactlab::run_suite(suite_name, spec, opts);
            emit(Json{{"suite", res.suite},
                      {"algebra", res.algebra},
                      {"passed", res.passed},
                      {"checked", res.checked},
                      {"detail", res.detail}});
            return res.passed ? 0 : 1;
        } else if (sc_kron->parsed()) {
            if (kron_action != "closedset")
                fail("usage", "unknown kron action: " + kron_action, 2);
            if (spec.kind != exactlab::AlgebraSpec::Kind::Kronecker)
                fail("usage", "kron subcommand requires a kronecker algebra spec", 2);
            const exactlab::KronModel model =
                exactlab::make_kron_model(spec.bound, spec.labels);
            emit(exactlab::json_of_kclosed(
                exactlab::family_closed_set(model, parse_family(kron_family))));
        }
        return 0;
    } catch (const exactlab::SpecParseError& e) {
        fail("parse", e.what(), 2, Json{{"line", e.line()}});
    } catch (const std::invalid_argument& e) {
        fail("usage", e.what(), 2);
    } catch (const std::logic_error& e) {
        fail("internal", e.what(), 2);
    } catch (const std::exception& e) {
        fail("error", e.what(), 2);
    }
}
