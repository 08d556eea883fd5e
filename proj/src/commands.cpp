#include "qpc/commands.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace qpc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string default_name(const std::string& stem) { return stem + ".qpc"; }

BigUint power_big(unsigned q, std::uint64_t e) { return BigUint::power(q, e); }

// Structured report for a switched code; claims d=3, rho=2.
CodeReport switched_report(const SwitchedCode& sw, unsigned m, const VerifyBudgets& budgets) {
    CodeReport rep;
    rep.n = sw.n();
    rep.size = power_big(sw.field()->q(), sw.n() - m - 1);
    rep.min_distance = min_distance_structured(sw, budgets);
    rep.covering_radius = covering_radius_structured(sw, budgets);
    rep.linear_set = switched_is_linear(sw);
    rep.translate_linear = switched_is_translate_linear(sw);
    rep.finish_radii();
    rep.checks = "structured";
    return rep;
}

CodeReport linear_report(const LinearCode& code, const VerifyBudgets& budgets) {
    CodeReport rep;
    rep.n = code.n;
    rep.size = power_big(code.field->q(), code.dim);
    rep.dim = code.dim;
    rep.min_distance = linear_min_distance(code, budgets);
    rep.covering_radius = build_coset_leader_table(code.parity, budgets.leader_entries).max_weight;
    rep.linear_set = true;
    rep.translate_linear = true;
    rep.finish_radii();
    rep.checks = "structured";
    // weight distribution when the code is small enough to enumerate quickly
    std::uint64_t words = 0;
    bool enumerable = true;
    try {
        words = ipow_checked(code.field->q(), code.dim);
    } catch (const std::overflow_error&) {
        enumerable = false;
    }
    if (enumerable && words <= std::min<std::uint64_t>(budgets.enum_words, 1u << 20)) {
        std::vector<std::uint64_t> counts(code.n + 1, 0);
        for_each_in_span(code.generator, [&](std::span<const Elem> w) {
            ++counts[hamming_weight(w)];
        });
        rep.weights = counts;
    }
    return rep;
}

std::string lambda_string(std::span<const Elem> lambdas) {
    std::string s;
    s.reserve(lambdas.size());
    for (Elem l : lambdas) s.push_back(lambda_digit_char(l));
    return s;
}

// The brute-force cross-check needs the whole word set in memory plus a pair
// scan plus an ambient scan; refuse before allocating anything when one of
// those cannot fit.
void check_exhaustive_budgets(unsigned q, std::size_t n, std::uint64_t size,
                              const VerifyBudgets& budgets) {
    std::uint64_t ambient;
    try {
        ambient = ipow_checked(q, n);
    } catch (const std::overflow_error&) {
        throw BudgetError("ambient scan over budget");
    }
    if (size == 0 || ambient > budgets.ambient_ops / size)
        throw BudgetError("ambient scan of " + std::to_string(ambient) + " x " +
                          std::to_string(size) + " distance evaluations over budget");
    if (size * (size - 1) / 2 > budgets.pair_ops) throw BudgetError("pair scan over budget");
    if (size > budgets.enum_words) throw BudgetError("materialization over budget");
}

}  // namespace

std::vector<Elem> random_lambdas(std::uint64_t seed, std::size_t count, unsigned q) {
    std::mt19937_64 rng(seed);
    std::vector<Elem> l(count);
    for (auto& x : l) x = Elem(rng() % q);
    return l;
}

CommandResult cmd_build(unsigned q, unsigned m, std::optional<unsigned> order,
                        const RunConfig& config) {
    auto [p, k] = Field::factor_prime_power(q);
    FieldPtr field = Field::get(p, k);
    AffineSpace space(field, m);
    unsigned r;
    if (order) {
        r = *order;
    } else {
        if (q < 3)
            throw std::invalid_argument("the default order (q-1)m - 2 needs q >= 3");
        r = (q - 1) * m - 2;
    }
    LinearCode code = build_grm(space, r);
    std::string path = config.out_path.empty()
                           ? default_name("rm_q" + std::to_string(q) + "_m" + std::to_string(m) +
                                          "_r" + std::to_string(r))
                           : config.out_path;
    write_file(path, serialize_linear(code, m));
    std::ostringstream os;
    os << "wrote " << path << '\n';
    os << "q=" << q << " m=" << m << " order=" << r << '\n';
    os << "n=" << code.n << " dim=" << code.dim << " d=" << grm_min_distance(q, m, r) << '\n';
    return {0, os.str()};
}

CommandResult cmd_switch(const std::string& in_path, std::size_t coord,
                         const std::string& lambda_spec, const RunConfig& config) {
    QpcFile file = parse_qpc(read_file(in_path));
    if (file.kind != QpcFile::Kind::Linear || !is_target_code(file))
        throw ParseError("switch input must be the order-(q-1)m-2 code of its parameters");
    const unsigned q = file.field->q();
    SwitchContext ctx = make_switch_context(q, file.m, coord);
    const std::size_t T = ctx.coset_count();

    std::vector<Elem> lambdas;
    std::string mode;
    if (lambda_spec == "random") {
        lambdas = random_lambdas(config.seed, T, q);
        mode = "random seed=" + std::to_string(config.seed);
    } else if (lambda_spec.rfind("single:", 0) == 0) {
        std::size_t comma = lambda_spec.find(',');
        if (comma == std::string::npos) throw ParseError("single spec must be single:t,v");
        std::size_t t;
        unsigned v;
        try {
            t = std::stoul(lambda_spec.substr(7, comma - 7));
            v = unsigned(std::stoul(lambda_spec.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad single spec: " + lambda_spec);
        }
        if (t >= T) throw ParseError("coset index out of range");
        if (v == 0 || v >= q) throw ParseError("switch value must be in [1, q)");
        lambdas.assign(T, 0);
        lambdas[t] = Elem(v);
        mode = "single";
    } else {
        if (lambda_spec.size() != T)
            throw ParseError("explicit switch vector must have " + std::to_string(T) + " digits");
        for (char c : lambda_spec) lambdas.push_back(lambda_digit_value(c, q));
        mode = "explicit";
    }

    SwitchedCode sw = ctx.switched(std::move(lambdas));
    std::string path = config.out_path.empty()
                           ? default_name("switched_q" + std::to_string(q) + "_m" +
                                          std::to_string(file.m) + "_i" + std::to_string(coord))
                           : config.out_path;
    write_file(path, serialize_switched(sw));
    std::ostringstream os;
    os << "wrote " << path << '\n';
    os << "q=" << q << " m=" << file.m << " i=" << coord << " cosets=" << T << " mode=" << mode
       << '\n';
    os << "lambda=" << lambda_string(sw.lambdas()) << '\n';
    return {0, os.str()};
}

CommandResult cmd_verify(const std::string& in_path, bool exhaustive, const RunConfig& config) {
    QpcFile file = parse_qpc(read_file(in_path));
    const VerifyBudgets& budgets = config.budgets;
    std::ostringstream os;
    int exit_code = 0;

    CodeReport rep;
    bool claims = false;  // construction files claim (n, q^(n-m-1), 3; 2)_q
    std::optional<FqMatrix> words;

    if (file.kind == QpcFile::Kind::Linear) {
        LinearCode code = realize_linear(file);
        rep = linear_report(code, budgets);
        claims = is_target_code(file);
        if (exhaustive) {
            try {
                std::uint64_t count = ipow_checked(file.field->q(), code.dim);
                check_exhaustive_budgets(file.field->q(), code.n, count, budgets);
                FqMatrix all(file.field, 0, code.n);
                for_each_in_span(code.generator,
                                 [&](std::span<const Elem> w) { all.append_row(w); });
                words = std::move(all);
            } catch (const std::overflow_error&) {
                os << "exhaustive=refused (materialization too large)\n";
                exit_code = 2;
            } catch (const BudgetError& e) {
                os << "exhaustive=refused (" << e.what() << ")\n";
                exit_code = 2;
            }
        }
    } else {
        SwitchedCode sw = realize_switched(file);
        rep = switched_report(sw, file.m, budgets);
        claims = true;
        if (exhaustive) {
            try {
                std::uint64_t count = ipow_checked(file.field->q(), sw.n() - file.m - 1);
                check_exhaustive_budgets(file.field->q(), sw.n(), count, budgets);
                words = materialize(sw, budgets.enum_words);
            } catch (const std::overflow_error&) {
                os << "exhaustive=refused (materialization too large)\n";
                exit_code = 2;
            } catch (const BudgetError& e) {
                os << "exhaustive=refused (" << e.what() << ")\n";
                exit_code = 2;
            }
        }
    }

    if (words) {
        try {
            unsigned d = min_distance_exhaustive(*words, budgets);
            unsigned rho = covering_radius_exhaustive(*words, budgets);
            bool lin = is_linear(*words);
            bool tlin = is_translate_linear(*words);
            if (d != rep.min_distance || rho != rep.covering_radius || lin != rep.linear_set ||
                (rep.translate_linear && tlin != *rep.translate_linear)) {
                os << "oracle_disagreement: structured (d=" << rep.min_distance
                   << ", rho=" << rep.covering_radius << ", linear=" << rep.linear_set
                   << ") vs exhaustive (d=" << d << ", rho=" << rho << ", linear=" << lin << ")\n";
                exit_code = 1;
            }
            rep.checks = "structured+exhaustive";
            rep.weights = weight_distribution(*words);
        } catch (const BudgetError& e) {
            os << "exhaustive=refused (" << e.what() << ")\n";
            if (exit_code == 0) exit_code = 2;
        }
    }

    bool claim_ok = !claims || (rep.min_distance == 3 && rep.covering_radius == 2 &&
                                rep.quasi_perfect && !rep.perfect);
    if (!claim_ok) exit_code = 1;

    os << rep.to_text();
    os << "verdict="
       << (exit_code == 0 ? "ok" : (exit_code == 1 ? "claim-violated" : "budget-refused")) << '\n';
    return {exit_code, os.str()};
}

CommandResult cmd_family(unsigned q, unsigned m, std::size_t coord, const std::string& count_spec,
                         const RunConfig& config) {
    const VerifyBudgets& budgets = config.budgets;
    SwitchContext ctx = make_switch_context(q, m, coord);
    const std::size_t T = ctx.coset_count();

    bool enumerate = false;
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    bool total_known = true;
    try {
        total = ipow_checked(q, T);
    } catch (const std::overflow_error&) {
        total_known = false;
    }
    if (count_spec == "all") {
        if (!total_known || total > (1u << 20))
            throw BudgetError("cannot enumerate all switch vectors at this size");
        enumerate = true;
        count = total;
    } else {
        try {
            count = std::stoull(count_spec);
        } catch (const std::exception&) {
            throw ParseError("count must be a number or \"all\"");
        }
        if (count == 0) throw ParseError("count must be positive");
        if (total_known && count > total) throw ParseError("count exceeds q^T");
        if (count > (1u << 20)) throw BudgetError("count too large");
    }

    std::ostringstream os;
    os << "family q=" << q << " m=" << m << " i=" << coord << " cosets=" << T << " count=" << count
       << " mode=";
    if (enumerate)
        os << "all";
    else if (config.seed_given)
        os << "random seed=" << config.seed;
    else
        os << "prefix";
    os << '\n';

    bool fingerprints = count <= 1024;
    bool certify = true;  // recover the switch vector from the materialized set
    os << "idx lambda d rho quasi_perfect linear translate_linear fingerprint\n";

    std::set<std::string> lambda_set, fp_set;
    std::uint64_t certified = 0;
    int exit_code = 0;
    std::mt19937_64 rng(config.seed);
    std::vector<Elem> lambdas(T);

    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (enumerate || !config.seed_given) {
            std::uint64_t v = idx;
            for (std::size_t t = 0; t < T; ++t) {
                lambdas[t] = Elem(v % q);
                v /= q;
            }
        } else {
            for (auto& l : lambdas) l = Elem(rng() % q);
        }
        SwitchedCode sw = ctx.switched(lambdas);
        unsigned d = min_distance_structured(sw, budgets);
        unsigned rho = covering_radius_structured(sw, budgets);
        bool lin = switched_is_linear(sw);
        bool tlin = switched_is_translate_linear(sw);
        bool qp = rho == (d - 1) / 2 + 1;
        if (d != 3 || rho != 2) exit_code = 1;

        std::string fp = "-";
        if (fingerprints || certify) {
            try {
                FqMatrix mat = materialize(sw, budgets.enum_words);
                if (certify) {
                    auto back = recover_lambdas(mat, *ctx.ri, ctx.partition.reps);
                    if (back != lambdas) exit_code = 1;
                    else ++certified;
                }
                if (fingerprints) {
                    fp = invariant_fingerprint(mat, budgets).to_string();
                    fp_set.insert(fp);
                }
            } catch (const BudgetError&) {
                certify = false;
                fingerprints = false;
            }
        }

        std::string ls = lambda_string(lambdas);
        lambda_set.insert(ls);
        os << idx << ' ' << ls << ' ' << d << ' ' << rho << ' ' << (qp ? "yes" : "no") << ' '
           << (lin ? "yes" : "no") << ' ' << (tlin ? "yes" : "no") << ' ' << fp << '\n';
    }

    os << "codes=" << count << '\n';
    os << "distinct_lambdas=" << lambda_set.size() << '\n';
    if (certified == count)
        os << "distinct_codes=" << lambda_set.size() << " (certified by switch-vector recovery)\n";
    else
        os << "distinct_codes=uncertified (materialization over budget)\n";
    if (fingerprints)
        os << "distinct_fingerprints=" << fp_set.size() << '\n';
    else
        os << "distinct_fingerprints=skipped\n";

    if (!config.out_path.empty()) write_file(config.out_path, os.str());
    return {exit_code, os.str()};
}

CommandResult cmd_bound(unsigned q, unsigned m, std::optional<double> epsilon,
                        const RunConfig& config) {
    (void)config;
    CountingBound cb = counting_bound(q, m);
    std::ostringstream os;
    os << "q=" << cb.q << " m=" << cb.m << " n=" << cb.n << '\n';
    os << "q_analogue=" << cb.q_analogue << '\n';
    os << "t_exponent=" << cb.t_exponent << '\n';
    os << "codes_total_exponent=" << cb.codes_total_exponent.to_string() << '\n';
    os << "codes_total=q^" << cb.codes_total_exponent.to_string() << '\n';
    os << "class_cap=" << cb.class_cap.to_string() << '\n';
    os << "bound_exponent=" << cb.bound_exponent.to_string() << '\n';
    os << "nonequivalent_lower_bound=q^(" << cb.bound_exponent.to_string() << ')';
    if (cb.bound_exponent.negative) os << " (vacuous at this scale)";
    os << '\n';

    if (epsilon) {
        // smallest m' with q^([m']_q - m') - n'(m'+2) > q^(c n'), compared in
        // exponent space with long doubles; no asymptotic claim implied
        double c = 1.0 / q - *epsilon;
        os << "epsilon=" << *epsilon << " c=" << c << '\n';
        bool found = false;
        for (unsigned mm = 2; mm <= 64; ++mm) {
            long double n = std::pow((long double)q, (long double)mm);
            long double mq = (n - 1) / (q - 1);
            long double lhs_exp = mq - mm;  // exponent of the dominant term
            long double rhs_exp = c * n;
            // the subtracted n(m+2) is negligible once lhs_exp clears rhs_exp
            // by one unit
            if (lhs_exp > rhs_exp + 1) {
                os << "smallest_m_with_bound_exceeding_q^(c*n)=" << mm << '\n';
                found = true;
                break;
            }
        }
        if (!found) os << "smallest_m_with_bound_exceeding_q^(c*n)=none up to m=64\n";
    }
    return {0, os.str()};
}

CommandResult cmd_export(const std::string& in_path, const RunConfig& config) {
    QpcFile file = parse_qpc(read_file(in_path));
    std::string canonical;
    if (file.kind == QpcFile::Kind::Linear) {
        LinearCode code = realize_linear(file);
        canonical = serialize_linear(code, file.m);
    } else {
        SwitchedCode sw = realize_switched(file);
        canonical = serialize_switched(sw);
    }
    if (!config.out_path.empty()) {
        write_file(config.out_path, canonical);
        return {0, "wrote " + config.out_path + "\n"};
    }
    return {0, canonical};
}

CommandResult cmd_import(const std::string& in_path, const RunConfig& config) {
    (void)config;
    QpcFile file = parse_qpc(read_file(in_path));
    std::ostringstream os;
    if (file.kind == QpcFile::Kind::Linear) {
        LinearCode code = realize_linear(file);
        os << "kind=linear q=" << file.field->spec_string() << " m=" << file.m << " n=" << code.n
           << " dim=" << code.dim << " target=" << (is_target_code(file) ? "yes" : "no") << '\n';
    } else {
        SwitchedCode sw = realize_switched(file);
        os << "kind=switched q=" << file.field->spec_string() << " m=" << file.m
           << " n=" << sw.n() << " i=" << sw.coord() << " cosets=" << sw.coset_count() << '\n';
    }
    return {0, os.str()};
}

}  // namespace qpc
