#include "chern/cli.h"

#include "chern/error.h"
#include "chern/filtration_check.h"
#include "chern/graded.h"
#include "chern/invariants.h"
#include "chern/json_io.h"
#include "chern/parse.h"
#include "chern/reps.h"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <optional>
#include <ostream>

namespace chern::cli {

namespace {

using nlohmann::json;

struct Options
{
	std::string group;
	std::string rep;
	std::string polynomial;
	std::optional<int> max_degree;
	std::string basis = "monomials";
	long k = 0;
	int p = 0;
	int p_max = 0;
	int degree = 0;
	bool json = false;
};

/** Usage problems detected after argument parsing. */
struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

void emit(std::ostream &out, Options const &opt, json doc, std::string const &text)
{
	if (opt.json)
	{
		doc["text"] = text;
		out << doc.dump(2) << "\n";
	}
	else
		out << text << "\n";
}

int resolve_degree(Options const &opt, VirtualCharacter const &x)
{
	if (opt.max_degree)
	{
		if (*opt.max_degree < 0)
			throw UsageError("--max-degree must be >= 0");
		return *opt.max_degree;
	}
	if (!x.is_effective())
		throw UsageError("--max-degree is required for virtual characters");
	return static_cast<int>(augmentation(x).get_si());
}

int cmd_chern(Options const &opt, std::ostream &out)
{
	auto g = GroupSpec::parse(opt.group);
	auto x = evaluate(parse_rep(opt.rep, g), g);
	int d = resolve_degree(opt, x);
	auto c = total_chern(x, d);
	json doc = {{"command", "chern"},
	            {"group", g.name()},
	            {"rep", opt.rep},
	            {"max_degree", d},
	            {"basis", opt.basis}};
	if (opt.basis == "generators")
	{
		if (!assert_g_rep(x, g))
			throw Error(ErrorCode::invariance,
			            fmt::format("{} is not a representation of {}", opt.rep, g.name()));
		auto e = rewrite(c, g);
		doc["result"] = to_json(e);
		emit(out, opt, std::move(doc), to_string(e));
	}
	else
	{
		doc["result"] = to_json(c);
		emit(out, opt, std::move(doc), to_string(c));
	}
	return ok;
}

int cmd_ch(Options const &opt, std::ostream &out)
{
	auto g = GroupSpec::parse(opt.group);
	auto x = evaluate(parse_rep(opt.rep, g), g);
	int d = resolve_degree(opt, x);
	auto c = chern_character(x, d);
	json doc = {{"command", "ch"},
	            {"group", g.name()},
	            {"rep", opt.rep},
	            {"max_degree", d},
	            {"result", to_json(c)}};
	emit(out, opt, std::move(doc), to_string(c));
	return ok;
}

int cmd_adams(Options const &opt, std::ostream &out)
{
	auto g = GroupSpec::parse(opt.group);
	auto x = evaluate(parse_rep(opt.rep, g), g);
	auto y = adams(opt.k, x);
	json doc = {{"command", "adams"},
	            {"group", g.name()},
	            {"rep", opt.rep},
	            {"k", opt.k},
	            {"result", to_json(y)}};
	emit(out, opt, std::move(doc), to_string(y));
	return ok;
}

int cmd_lambda(Options const &opt, std::ostream &out)
{
	auto g = GroupSpec::parse(opt.group);
	auto x = evaluate(parse_rep(opt.rep, g), g);
	auto y = exterior(x, opt.p);
	json doc = {{"command", "lambda"},
	            {"group", g.name()},
	            {"rep", opt.rep},
	            {"p", opt.p},
	            {"result", to_json(y)}};
	emit(out, opt, std::move(doc), to_string(y));
	return ok;
}

int cmd_check_prop(Options const &opt, std::ostream &out)
{
	auto g = GroupSpec::parse(opt.group);
	if (opt.p_max < 0)
		throw UsageError("--p-max must be >= 0");
	if (opt.degree < 1)
		throw UsageError("--degree must be >= 1");
	auto report = verify_prop(g, opt.p_max, opt.degree);
	if (opt.json)
		out << to_json(report).dump(2) << "\n";
	else
	{
		out << fmt::format("{} d={}\n", g.name(), opt.degree);
		out << fmt::format("{:>3} {:>12} {:>16} {}\n", "p", "dim G^p(S)", "dim G^p(R)&S",
		                   "equal");
		for (auto const &e : report.entries)
			out << fmt::format("{:>3} {:>12} {:>16} {}{}\n", e.p, e.dim_gamma_S,
			                   e.dim_gamma_R_cap_S, e.equal ? "yes" : "NO",
			                   e.included ? "" : " (inclusion violated)");
		out << (report.pass ? "pass" : "FAIL") << "\n";
	}
	return report.pass ? ok : verification_failure;
}

int cmd_rewrite(Options const &opt, std::ostream &out)
{
	auto g = GroupSpec::parse(opt.group);
	auto f = parse_polynomial(opt.polynomial, g.rank());
	auto e = rewrite(f, g);
	json doc = {{"command", "rewrite"},
	            {"group", g.name()},
	            {"polynomial", to_string(f)},
	            {"result", to_json(e)}};
	emit(out, opt, std::move(doc), to_string(e));
	return ok;
}

void add_group_rep(CLI::App *cmd, Options &opt)
{
	cmd->add_option("group", opt.group, "GL<n>, Sp<2l>, SO<m> or T<n>")->required();
	cmd->add_option("rep", opt.rep, "representation expression")->required();
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	Options opt;
	CLI::App app{"Chern classes and characters of representations of classical groups",
	             "chernlab"};
	app.require_subcommand(1);

	auto *chern = app.add_subcommand("chern", "total Chern class");
	add_group_rep(chern, opt);
	chern->add_option("--max-degree", opt.max_degree,
	                  "highest degree (default: dimension of the representation)");
	chern->add_option("--basis", opt.basis, "monomials or generators")
	    ->check(CLI::IsMember({"monomials", "generators"}));
	chern->add_flag("--json", opt.json);

	auto *ch = app.add_subcommand("ch", "Chern character");
	add_group_rep(ch, opt);
	ch->add_option("--max-degree", opt.max_degree, "highest degree");
	ch->add_flag("--json", opt.json);

	auto *adams_cmd = app.add_subcommand("adams", "Adams operation psi^k");
	adams_cmd->add_option("-k", opt.k, "k >= 1")->required()->check(CLI::PositiveNumber);
	add_group_rep(adams_cmd, opt);
	adams_cmd->add_flag("--json", opt.json);

	auto *lambda_cmd = app.add_subcommand("lambda", "exterior power lambda^p");
	lambda_cmd->add_option("-p", opt.p, "p >= 0")->required()->check(CLI::NonNegativeNumber);
	add_group_rep(lambda_cmd, opt);
	lambda_cmd->add_flag("--json", opt.json);

	auto *check = app.add_subcommand("check-prop",
	                                 "compare Gamma^p(S) with Gamma^p(R) cap S");
	check->add_option("group", opt.group, "group spec")->required();
	check->add_option("--p-max", opt.p_max, "largest p")->required();
	check->add_option("--degree", opt.degree, "model truncation degree")->required();
	check->add_flag("--json", opt.json);

	auto *rewrite_cmd = app.add_subcommand("rewrite",
	                                       "express an invariant polynomial in I_1..I_l");
	rewrite_cmd->add_option("group", opt.group, "group spec")->required();
	rewrite_cmd->add_option("polynomial", opt.polynomial, "polynomial in x1..xn")->required();
	rewrite_cmd->add_flag("--json", opt.json);

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try
	{
		app.parse(reversed);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e, out, err);
		return code == 0 ? ok : usage_error;
	}

	try
	{
		if (chern->parsed())
			return cmd_chern(opt, out);
		if (ch->parsed())
			return cmd_ch(opt, out);
		if (adams_cmd->parsed())
			return cmd_adams(opt, out);
		if (lambda_cmd->parsed())
			return cmd_lambda(opt, out);
		if (check->parsed())
			return cmd_check_prop(opt, out);
		if (rewrite_cmd->parsed())
			return cmd_rewrite(opt, out);
	}
	catch (UsageError const &e)
	{
		err << "error: usage: " << e.what() << "\n";
		return usage_error;
	}
	catch (Error const &e)
	{
		err << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
		return e.code() == ErrorCode::syntax ? usage_error : computation_error;
	}
	return usage_error;
}

} // namespace chern::cli
