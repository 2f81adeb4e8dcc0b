#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <freeprob/errors.hpp>
#include <freeprob/freeconv.hpp>
#include <freeprob/hopf.hpp>
#include <freeprob/json_io.hpp>
#include <freeprob/ncpart.hpp>
#include <freeprob/onedim.hpp>
#include <freeprob/repr.hpp>
#include <freeprob/verify.hpp>

namespace freeprob::cli
{

namespace
{

using json_io::json;

// Every option any subcommand may bind. Each subcommand registers only the
// ones it reads.
struct Params
{
    int n = 0;
    int s = 1;
    int maxdeg = 0;
    int D = -1;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    int fixtures = 10;
    bool reduced = false;
    std::string f, g, r, m, t, a, c;
    std::string partition, p, q, cuts, word, w, v, positions, monomial, matrix;
    std::string basis;
    std::string suite = "all";
    std::string out;
};

struct Command
{
    CommandInfo info;
    std::function<void(CLI::App&, Params&)> options;
    std::function<int(const Params&, std::ostream&)> action;
};

// Inline JSON when the text starts with '{' or '[', a file path otherwise.
json load(const std::string& spec)
{
    const auto first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) {
        return json_io::parse(spec);
    }
    std::ifstream in(spec);
    if (!in) {
        throw ValidationError("cannot read input file '" + spec + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return json_io::parse(buffer.str());
}

NCSeries load_series(const std::string& spec)
{
    return json_io::series_from_json(load(spec));
}

// A one-variable series given either as a coefficient array or as a
// one-letter series object.
PowerSeries1 load_power_series(const std::string& spec)
{
    const auto j = load(spec);
    if (j.is_array()) {
        return json_io::power_series_from_json(j);
    }
    return to_power_series(json_io::series_from_json(j));
}

NCSeries load_one_letter(const std::string& spec)
{
    const auto j = load(spec);
    if (j.is_array()) {
        return to_nc_series(json_io::power_series_from_json(j));
    }
    auto f = json_io::series_from_json(j);
    if (f.alphabet_size() != 1) {
        throw AlphabetMismatch("expected a one-letter series");
    }
    return f;
}

std::vector<int> load_ints(const std::string& spec)
{
    const auto j = load(spec);
    if (!j.is_array()) {
        throw ValidationError("expected an integer array");
    }
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) {
            throw ValidationError("expected an integer array");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

Word load_word(const std::string& spec)
{
    return json_io::word_from_json(load(spec));
}

NCPartition load_partition(const std::string& spec, int n)
{
    return json_io::partition_from_json(load(spec), n);
}

std::vector<Block> load_blocks(const std::string& spec)
{
    const auto j = load(spec);
    if (!j.is_array()) {
        throw ValidationError("expected an array of blocks");
    }
    std::vector<Block> blocks;
    for (const auto& b : j) {
        blocks.push_back(load_ints(b.dump()));
    }
    return blocks;
}

// [[1],[2,3]] -> X_1 X_{23}
Monomial load_monomial(const std::string& spec)
{
    const auto j = load(spec);
    if (!j.is_array()) {
        throw ValidationError("a monomial is an array of words");
    }
    Monomial m;
    for (const auto& w : j) {
        m *= Monomial::generator(json_io::word_from_json(w));
    }
    return m;
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump() << '\n';
}

json value_json(const Rational& x)
{
    return {{"value", to_string(x)}};
}

// Option registration helpers.
void opt_n(CLI::App& app, Params& p)
{
    app.add_option("--n", p.n, "ground set size")->required()->check(CLI::Range(1, kDefaultNcCap));
}

void opt_shape(CLI::App& app, Params& p)
{
    app.add_option("--s", p.s, "alphabet size")->required()->check(CLI::Range(1, 16));
    app.add_option("--maxdeg", p.maxdeg, "truncation degree")->required()->check(CLI::Range(1, kDefaultNcCap));
}

void opt_series(CLI::App& app, std::string& target, const char* name, const char* help)
{
    app.add_option(name, target, help)->required();
}

void opt_jobs(CLI::App& app, Params& p)
{
    app.add_option("--jobs", p.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

void opt_D(CLI::App& app, Params& p)
{
    app.add_option("--D", p.D, "weighted degree bound (default maxdeg-1)")->check(CLI::Range(1, 16));
}

std::vector<Command> build_commands()
{
    std::vector<Command> cmds;
    auto add = [&](std::string group, std::string name, std::vector<std::string> ops,
                   std::function<void(CLI::App&, Params&)> options,
                   std::function<int(const Params&, std::ostream&)> action) {
        cmds.push_back({{std::move(group), std::move(name), std::move(ops)}, std::move(options), std::move(action)});
    };

    // nc
    add("nc", "enumerate", {"enumerate_nc"}, opt_n, [](const Params& p, std::ostream& out) {
        json list = json::array();
        for (const auto& x : enumerate_nc(p.n)) {
            list.push_back(json_io::to_json(x));
        }
        emit(out, list);
        return kOk;
    });
    add(
        "nc", "kreweras", {"kreweras"},
        [](CLI::App& app, Params& p) {
            opt_n(app, p);
            app.add_option("--partition", p.partition, "partition as [[1,2],[3]]")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(kreweras(load_partition(p.partition, p.n))));
            return kOk;
        });
    add(
        "nc", "k2", {"kreweras_squared_shift"},
        [](CLI::App& app, Params& p) {
            opt_n(app, p);
            app.add_option("--partition", p.partition, "partition")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(kreweras_squared_shift(load_partition(p.partition, p.n))));
            return kOk;
        });
    add(
        "nc", "join", {"nc_join"},
        [](CLI::App& app, Params& p) {
            opt_n(app, p);
            app.add_option("--p", p.p, "first partition")->required();
            app.add_option("--q", p.q, "second partition")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(nc_join(load_partition(p.p, p.n), load_partition(p.q, p.n))));
            return kOk;
        });
    add(
        "nc", "check", {"is_noncrossing"},
        [](CLI::App& app, Params& p) {
            opt_n(app, p);
            app.add_option("--partition", p.partition, "blocks, possibly crossing")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, {{"noncrossing", is_noncrossing(p.n, load_blocks(p.partition))}});
            return kOk;
        });
    add(
        "nc", "interval", {"interval_partition"},
        [](CLI::App& app, Params& p) {
            opt_n(app, p);
            app.add_option("--cuts", p.cuts, "increasing cut points ending at n, e.g. [2,4]")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(interval_partition(p.n, load_ints(p.cuts))));
            return kOk;
        });

    // series
    auto unary_series = [](const char* flag) {
        return [flag](CLI::App& app, Params& p) { opt_series(app, p.f, flag, "series (JSON or file)"); };
    };
    auto binary_series = [](CLI::App& app, Params& p) {
        opt_series(app, p.f, "--f", "first series");
        opt_series(app, p.g, "--g", "second series");
    };
    add("series", "m2c", {"cumulants_from_moments"}, unary_series("--m"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(cumulants_from_moments(load_series(p.f))));
        return kOk;
    });
    add("series", "c2m", {"moments_from_cumulants"}, unary_series("--r"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(moments_from_cumulants(load_series(p.f))));
        return kOk;
    });
    add("series", "zeta", {"zeta"}, opt_shape, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(zeta(p.s, p.maxdeg)));
        return kOk;
    });
    add("series", "moeb", {"moeb"}, opt_shape, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(moeb(p.s, p.maxdeg)));
        return kOk;
    });
    add("series", "unit", {"unit"}, opt_shape, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(NCSeries::unit(p.s, p.maxdeg)));
        return kOk;
    });
    add("series", "add", {"add"}, binary_series, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(freeprob::add(load_series(p.f), load_series(p.g))));
        return kOk;
    });
    add(
        "series", "scale", {"scale"},
        [](CLI::App& app, Params& p) {
            app.add_option("--c", p.c, "rational scalar p/q")->required();
            opt_series(app, p.f, "--f", "series");
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(scale(parse_rational(p.c), load_series(p.f))));
            return kOk;
        });
    add("series", "mul", {"cauchy_mul"}, binary_series, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(cauchy_mul(load_series(p.f), load_series(p.g))));
        return kOk;
    });
    add(
        "series", "truncate", {"truncate"},
        [](CLI::App& app, Params& p) {
            opt_series(app, p.f, "--f", "series");
            app.add_option("--maxdeg", p.maxdeg, "new truncation degree")->required()->check(CLI::PositiveNumber);
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(truncate(load_series(p.f), p.maxdeg)));
            return kOk;
        });
    add(
        "series", "coeff", {"coeff"},
        [](CLI::App& app, Params& p) {
            opt_series(app, p.f, "--f", "series");
            app.add_option("--word", p.word, "word, e.g. [1,2]")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, value_json(coeff(load_series(p.f), load_word(p.word))));
            return kOk;
        });
    add(
        "series", "restrict", {"restrict_word"},
        [](CLI::App& app, Params& p) {
            app.add_option("--word", p.word, "word")->required();
            app.add_option("--positions", p.positions, "1-based increasing positions")->required();
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(restrict_word(load_word(p.word), load_ints(p.positions))));
            return kOk;
        });
    add(
        "series", "blockeval", {"eval_block_functional"},
        [](CLI::App& app, Params& p) {
            opt_series(app, p.f, "--f", "series");
            app.add_option("--word", p.word, "word")->required();
            app.add_option("--partition", p.partition, "non-crossing partition of the positions")->required();
        },
        [](const Params& p, std::ostream& out) {
            const auto w = load_word(p.word);
            const auto pi = load_partition(p.partition, static_cast<int>(w.size()));
            emit(out, value_json(eval_block_functional(load_series(p.f), w, pi)));
            return kOk;
        });

    // conv
    add(
        "conv", "box", {"box_conv"},
        [=](CLI::App& app, Params& p) {
            binary_series(app, p);
            opt_jobs(app, p);
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(box_conv(load_series(p.f), load_series(p.g), p.jobs)));
            return kOk;
        });
    add("conv", "inv", {"box_inverse"}, unary_series("--f"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(box_inverse(load_series(p.f))));
        return kOk;
    });
    add("conv", "addv", {"addv"}, binary_series, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(addv(load_series(p.f), load_series(p.g))));
        return kOk;
    });
    add("conv", "mulv", {"mulv"}, binary_series, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(mulv(load_series(p.f), load_series(p.g))));
        return kOk;
    });
    add("conv", "joinfree", {"join_free"}, binary_series, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(join_free(load_series(p.f), load_series(p.g))));
        return kOk;
    });
    add(
        "conv", "grouped", {"grouped_cumulants"},
        [](CLI::App& app, Params& p) {
            opt_series(app, p.r, "--r", "cumulant series");
            app.add_option("--cuts", p.cuts, "interval cut points, e.g. [2,4]")->required();
            app.add_option("--word", p.word, "word (default 1..n)");
        },
        [](const Params& p, std::ostream& out) {
            const auto r = load_series(p.r);
            const auto cuts = load_ints(p.cuts);
            emit(out, value_json(p.word.empty() ? grouped_cumulants(r, cuts)
                                                : grouped_cumulants(r, load_word(p.word), cuts)));
            return kOk;
        });
    add("conv", "commutator", {"commutator"}, binary_series, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(commutator(load_series(p.f), load_series(p.g))));
        return kOk;
    });
    add("conv", "torus", {"torus_factor"}, unary_series("--f"), [](const Params& p, std::ostream& out) {
        const auto [t, u] = torus_factor(load_series(p.f));
        emit(out, {{"torus", json_io::to_json(t)}, {"unipotent", json_io::to_json(u)}});
        return kOk;
    });

    // hopf
    auto generator_opts = [](CLI::App& app, Params& p) {
        opt_shape(app, p);
        app.add_option("--word", p.word, "generator word")->required();
    };
    add("hopf", "coproduct", {"coproduct"}, generator_opts, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(coproduct(CoordRing{p.s, p.maxdeg, Variant::full}, load_word(p.word))));
        return kOk;
    });
    add(
        "hopf", "antipode", {"antipode"},
        [=](CLI::App& app, Params& p) {
            generator_opts(app, p);
            app.add_flag("--reduced", p.reduced, "use the reduced coordinates");
        },
        [](const Params& p, std::ostream& out) {
            const auto variant = p.reduced ? Variant::reduced : Variant::full;
            emit(out, json_io::to_json(antipode(CoordRing{p.s, p.maxdeg, variant}, load_word(p.word))));
            return kOk;
        });
    add(
        "hopf", "counit", {"counit"},
        [](CLI::App& app, Params& p) {
            opt_shape(app, p);
            app.add_option("--monomial", p.monomial, "product of generators as [[1],[1,2]]")->required();
        },
        [](const Params& p, std::ostream& out) {
            const CoordRing ring{p.s, p.maxdeg, Variant::full};
            const auto m = load_monomial(p.monomial);
            for (const auto& factor : m.factors()) {
                CoordPoly::generator(ring, factor.first);
            }
            emit(out, value_json(counit(CoordPoly::monomial(ring, m))));
            return kOk;
        });
    add("hopf", "reduced", {"reduced_coproduct"}, generator_opts, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(reduced_coproduct(p.s, p.maxdeg, load_word(p.word))));
        return kOk;
    });
    add("hopf", "fgl", {"formal_group_law"}, generator_opts, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(formal_group_law(p.s, p.maxdeg, load_word(p.word))));
        return kOk;
    });
    add("hopf", "bilinear", {"bilinear_part"}, generator_opts, [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(bilinear_part(p.s, p.maxdeg, load_word(p.word))));
        return kOk;
    });
    add(
        "hopf", "bracket", {"lie_bracket"},
        [](CLI::App& app, Params& p) {
            opt_shape(app, p);
            app.add_option("--w", p.w, "first generator word")->required();
            app.add_option("--v", p.v, "second generator word")->required();
        },
        [](const Params& p, std::ostream& out) {
            json terms = json::array();
            for (const auto& [u, c] : lie_bracket(p.s, p.maxdeg, load_word(p.w), load_word(p.v))) {
                terms.push_back({{"word", json_io::to_json(u)}, {"value", to_string(c)}});
            }
            emit(out, {{"bracket", terms}});
            return kOk;
        });

    // repr
    add(
        "repr", "build", {"build_rep"},
        [=](CLI::App& app, Params& p) {
            opt_series(app, p.f, "--f", "unipotent series");
            opt_D(app, p);
            opt_jobs(app, p);
        },
        [](const Params& p, std::ostream& out) {
            const auto f = load_series(p.f);
            const int D = p.D > 0 ? p.D : f.max_degree() - 1;
            const auto basis = MonomialBasis::reduced(f.alphabet_size(), f.max_degree(), D);
            emit(out, json_io::to_json(build_rep(f, D, p.jobs), basis.keys()));
            return kOk;
        });
    add(
        "repr", "torus", {"build_torus_rep"},
        [=](CLI::App& app, Params& p) {
            opt_series(app, p.t, "--t", "torus element (first-order terms only)");
            opt_D(app, p);
        },
        [](const Params& p, std::ostream& out) {
            const auto t = load_series(p.t);
            const int D = p.D > 0 ? p.D : t.max_degree() - 1;
            const auto basis = MonomialBasis::full(t.alphabet_size(), t.max_degree(), std::max(D, 0));
            emit(out, json_io::to_json(build_torus_rep(t, basis), basis.keys()));
            return kOk;
        });
    add(
        "repr", "strafo", {"s_transform"},
        [=](CLI::App& app, Params& p) {
            opt_series(app, p.f, "--f", "invertible series");
            opt_D(app, p);
            opt_jobs(app, p);
        },
        [](const Params& p, std::ostream& out) {
            const auto f = load_series(p.f);
            const int D = p.D > 0 ? p.D : f.max_degree() - 1;
            const auto basis = MonomialBasis::full(f.alphabet_size(), f.max_degree(), D);
            emit(out, json_io::to_json(s_transform(f, D, p.jobs), basis.keys()));
            return kOk;
        });
    add(
        "repr", "certify", {"certify_unipotent", "certify_triangular"},
        [](CLI::App& app, Params& p) {
            app.add_option("--matrix", p.matrix, "matrix JSON (rows, optional basis)")->required();
            auto* basis = app.add_option("--basis", p.basis, "check against this basis: reduced or full")
                              ->check(CLI::IsMember({"reduced", "full"}));
            app.add_option("--s", p.s, "alphabet size")->check(CLI::Range(1, 16))->needs(basis);
            app.add_option("--maxdeg", p.maxdeg, "truncation degree")->check(CLI::Range(1, kDefaultNcCap))->needs(basis);
            opt_D(app, p);
        },
        [](const Params& p, std::ostream& out) {
            const auto j = load(p.matrix);
            const auto m = json_io::matrix_from_json(j);
            bool triangular = false;
            if (!p.basis.empty()) {
                if (p.maxdeg < 1) {
                    throw ValidationError("--basis needs --s and --maxdeg");
                }
                const int D = p.D > 0 ? p.D : p.maxdeg - 1;
                const auto basis = p.basis == "full" ? MonomialBasis::full(p.s, p.maxdeg, D)
                                                     : MonomialBasis::reduced(p.s, p.maxdeg, D);
                triangular = certify_triangular(m, basis);
            } else {
                // without a basis: square, upper triangular, and sized like the manifest if one is given
                triangular = m.rows() == m.cols() && is_upper_triangular(m);
                if (j.is_object() && j.contains("basis")) {
                    triangular = triangular && j.at("basis").size() == static_cast<std::size_t>(m.rows());
                }
            }
            const auto index = m.rows() == m.cols() ? nilpotency_index(m) : std::nullopt;
            const bool unipotent = m.rows() == m.cols() && certify_unipotent(m);
            emit(out, {{"unipotent", unipotent},
                       {"triangular", triangular},
                       {"nilpotency_index", index ? json(*index) : json(nullptr)}});
            return unipotent && triangular ? kOk : kVerificationFailed;
        });
    add("repr", "sdim1", {"one_dim_s_matrix"}, unary_series("--a"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(one_dim_s_matrix(load_one_letter(p.f))));
        return kOk;
    });

    // onedim
    auto one_var = [](const char* flag) {
        return [flag](CLI::App& app, Params& p) {
            opt_series(app, p.f, flag, "one-variable series: coefficient array or one-letter series");
        };
    };
    add("onedim", "finverse", {"comp_inverse"}, one_var("--f"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(comp_inverse(load_power_series(p.f))));
        return kOk;
    });
    add(
        "onedim", "compose", {"compose"},
        [](CLI::App& app, Params& p) {
            opt_series(app, p.f, "--f", "outer series");
            opt_series(app, p.g, "--g", "inner series (no constant term)");
        },
        [](const Params& p, std::ostream& out) {
            emit(out, json_io::to_json(compose(load_power_series(p.f), load_power_series(p.g))));
            return kOk;
        });
    add("onedim", "ftrafo", {"f_transform"}, one_var("--f"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(f_transform(load_power_series(p.f))));
        return kOk;
    });
    add("onedim", "svtrafo", {"s_v_transform"}, one_var("--m"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(s_v_transform(load_one_letter(p.f))));
        return kOk;
    });
    add("onedim", "log", {"log_morphism"}, one_var("--f"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(log_morphism(load_one_letter(p.f))));
        return kOk;
    });
    add("onedim", "exp", {"exp_morphism"}, one_var("--t"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(exp_morphism(load_power_series(p.f))));
        return kOk;
    });
    add("onedim", "expv", {"exp_v"}, one_var("--m"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(exp_v(load_one_letter(p.f))));
        return kOk;
    });
    add("onedim", "logv", {"log_v"}, one_var("--m"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(log_v(load_one_letter(p.f))));
        return kOk;
    });
    add("onedim", "rv", {"r_v"}, one_var("--m"), [](const Params& p, std::ostream& out) {
        emit(out, json_io::to_json(r_v(load_one_letter(p.f))));
        return kOk;
    });
    add(
        "onedim", "symm", {"symm_coordinates"},
        [](CLI::App& app, Params& p) {
            app.add_option("--maxdeg", p.maxdeg, "truncation degree")->required()->check(CLI::Range(2, 10));
        },
        [](const Params& p, std::ostream& out) {
            json list = json::array();
            const auto h = symm_coordinates(p.maxdeg);
            for (std::size_t k = 0; k < h.size(); ++k) {
                auto entry = json_io::to_json(h[k]);
                entry["n"] = k + 1;
                list.push_back(entry);
            }
            emit(out, list);
            return kOk;
        });

    // verify
    add(
        "verify", "", {"verify"},
        [](CLI::App& app, Params& p) {
            app.add_option("suite", p.suite, "all or one of the suite names")->required();
            app.add_option("--s", p.s, "alphabet size")->check(CLI::Range(1, 4));
            app.add_option("--maxdeg", p.maxdeg, "truncation degree")->check(CLI::Range(2, 8));
            app.add_option("--seed", p.seed, "fixture seed");
            app.add_option("--fixtures", p.fixtures, "fixtures per check")->check(CLI::Range(1, 1000));
            opt_jobs(app, p);
        },
        [](const Params& p, std::ostream& out) {
            VerifyOptions o;
            o.s = p.s;
            o.maxdeg = p.maxdeg > 0 ? p.maxdeg : 4;
            o.seed = p.seed;
            o.jobs = p.jobs;
            o.fixtures = p.fixtures;
            const auto results = p.suite == "all" ? run_all(o) : run_suite(p.suite, o);
            out << format_table(results);
            const bool ok = all_passed(results);
            out << (ok ? "all checks passed" : "verification FAILED") << " (" << results.size() << " checks)\n";
            return ok ? kOk : kVerificationFailed;
        });

    return cmds;
}

const std::vector<Command>& command_table()
{
    static const std::vector<Command> table = build_commands();
    return table;
}

} // namespace

const std::vector<CommandInfo>& commands()
{
    static const std::vector<CommandInfo> infos = [] {
        std::vector<CommandInfo> out;
        for (const auto& c : command_table()) {
            out.push_back(c.info);
        }
        return out;
    }();
    return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Params params;
    CLI::App app{"Exact computations with the boxed convolution of free probability", "freeprob"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--out", params.out, "write the result to this file instead of standard output");

    static const std::map<std::string, std::string> group_help = {
        {"nc", "non-crossing partitions and the Kreweras complement"},
        {"series", "word-indexed series and moment/cumulant conversion"},
        {"conv", "boxed convolution and derived group operations"},
        {"hopf", "coordinate Hopf algebra: coproduct, antipode, brackets"},
        {"repr", "matrix representations and certificates"},
        {"onedim", "one-variable transforms, LOG/EXP and the V-operations"},
        {"verify", "run the built-in property suites"},
    };
    std::map<std::string, CLI::App*> groups;
    std::vector<std::pair<const Command*, CLI::App*>> bound;
    for (const auto& cmd : command_table()) {
        auto& group = groups[cmd.info.group];
        if (!group) {
            const auto help = group_help.find(cmd.info.group);
            group = app.add_subcommand(cmd.info.group, help == group_help.end() ? "" : help->second);
            if (!cmd.info.name.empty()) {
                group->require_subcommand(1);
            }
        }
        CLI::App* target = cmd.info.name.empty() ? group : group->add_subcommand(cmd.info.name);
        cmd.options(*target, params);
        bound.emplace_back(&cmd, target);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    const Command* chosen = nullptr;
    for (const auto& [cmd, target] : bound) {
        if (target->parsed()) {
            chosen = cmd;
        }
    }
    if (!chosen) {
        err << "no subcommand given\n";
        return kUsageError;
    }

    try {
        if (params.out.empty()) {
            return chosen->action(params, out);
        }
        std::ostringstream buffer;
        const int code = chosen->action(params, buffer);
        std::ofstream file(params.out);
        if (!file) {
            err << "cannot write '" << params.out << "'\n";
            return kValidationError;
        }
        file << buffer.str();
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kValidationError;
    }
}

} // namespace freeprob::cli
