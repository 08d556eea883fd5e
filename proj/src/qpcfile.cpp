#include "qpc/qpcfile.hpp"

#include <sstream>

namespace qpc {

namespace {

constexpr const char* kHeader = "QPC v1";

unsigned derive_m(const Field& f, std::size_t n) {
    unsigned m = 0;
    std::size_t v = 1;
    while (v < n) {
        v *= f.q();
        ++m;
    }
    if (v != n) throw std::logic_error("code length is not a power of q");
    return m;
}

void append_matrix(std::ostringstream& os, const FqMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
}

class LineReader {
  public:
    explicit LineReader(const std::string& text) : is_(text) {}

    std::string next(const char* what) {
        std::string line;
        if (!std::getline(is_, line)) throw ParseError(std::string("unexpected end of file, expected ") + what);
        return line;
    }

    bool at_end() {
        return is_.peek() == std::char_traits<char>::eof();
    }

  private:
    std::istringstream is_;
};

std::string expect_key(LineReader& in, const std::string& key) {
    std::string line = in.next(key.c_str());
    if (line.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "= line, got: " + line);
    return line.substr(key.size() + 1);
}

FqMatrix read_rows(LineReader& in, FieldPtr field, std::size_t rows, std::size_t cols,
                   const char* what) {
    FqMatrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::istringstream ls(in.next(what));
        for (std::size_t c = 0; c < cols; ++c) {
            std::int64_t v;
            if (!(ls >> v)) throw ParseError(std::string("short row in ") + what);
            if (v < 0 || v >= std::int64_t(field->q()))
                throw ParseError("element index out of range in " + std::string(what));
            m.at(r, c) = Elem(v);
        }
        std::string junk;
        if (ls >> junk) throw ParseError(std::string("over-long or malformed row in ") + what);
    }
    return m;
}

}  // namespace

char lambda_digit_char(Elem v) {
    if (v < 10) return char('0' + v);
    if (v < 36) return char('a' + (v - 10));
    throw std::invalid_argument("switch digits support q <= 36");
}

Elem lambda_digit_value(char c, unsigned q) {
    unsigned v;
    if (c >= '0' && c <= '9')
        v = unsigned(c - '0');
    else if (c >= 'a' && c <= 'z')
        v = unsigned(c - 'a') + 10;
    else
        throw ParseError(std::string("bad switch digit: ") + c);
    if (v >= q) throw ParseError(std::string("switch digit out of range: ") + c);
    return Elem(v);
}

std::string serialize_linear(const LinearCode& code, unsigned m) {
    std::ostringstream os;
    os << kHeader << '\n';
    os << "q=" << code.field->spec_string() << '\n';
    os << "m=" << m << '\n';
    os << "kind=linear\n";
    os << "dim=" << code.dim << '\n';
    append_matrix(os, code.generator);
    return os.str();
}

std::string serialize_switched(const SwitchedCode& sw) {
    std::ostringstream os;
    os << kHeader << '\n';
    os << "q=" << sw.field()->spec_string() << '\n';
    os << "m=" << derive_m(*sw.field(), sw.n()) << '\n';
    os << "kind=switched\n";
    os << "i=" << sw.coord() << '\n';
    append_matrix(os, sw.ri()->basis());
    append_matrix(os, sw.extension());
    os << "lambda=";
    for (Elem l : sw.lambdas()) os << lambda_digit_char(l);
    os << '\n';
    return os.str();
}

QpcFile parse_qpc(const std::string& text) {
    LineReader in(text);
    if (in.next("header") != kHeader) throw ParseError("missing QPC v1 header");
    QpcFile file;
    file.field = Field::parse_spec(expect_key(in, "q"));
    const Field& f = *file.field;
    try {
        file.m = unsigned(std::stoul(expect_key(in, "m")));
    } catch (const std::exception&) {
        throw ParseError("bad m= line");
    }
    if (file.m < 1) throw ParseError("m must be >= 1");
    std::uint64_t n64;
    try {
        n64 = ipow_checked(f.q(), file.m);
    } catch (const std::overflow_error&) {
        throw ParseError("q^m too large");
    }
    if (n64 > (1u << 24)) throw ParseError("q^m too large");
    const std::size_t n = std::size_t(n64);

    std::string kind = expect_key(in, "kind");
    if (kind == "linear") {
        file.kind = QpcFile::Kind::Linear;
        std::size_t dim;
        try {
            dim = std::stoul(expect_key(in, "dim"));
        } catch (const std::exception&) {
            throw ParseError("bad dim= line");
        }
        if (dim > n) throw ParseError("dim exceeds the length");
        file.generator = read_rows(in, file.field, dim, n, "generator");
    } else if (kind == "switched") {
        file.kind = QpcFile::Kind::Switched;
        try {
            file.coord = std::stoul(expect_key(in, "i"));
        } catch (const std::exception&) {
            throw ParseError("bad i= line");
        }
        if (file.coord >= n) throw ParseError("coordinate index out of range");
        const std::uint64_t mq = (n64 - 1) / (f.q() - 1);
        const std::size_t ri_rows = std::size_t(n64 - mq - 1);
        const std::size_t ext_rows = std::size_t(mq - file.m);
        file.ri_basis = read_rows(in, file.field, ri_rows, n, "R_i basis");
        file.extension = read_rows(in, file.field, ext_rows, n, "extension rows");
        std::string lam = expect_key(in, "lambda");
        std::uint64_t want;
        try {
            want = ipow_checked(f.q(), ext_rows);
        } catch (const std::overflow_error&) {
            throw ParseError("coset count too large");
        }
        if (lam.size() != want)
            throw ParseError("lambda must have exactly " + std::to_string(want) + " digits");
        file.lambdas.reserve(lam.size());
        for (char c : lam) file.lambdas.push_back(lambda_digit_value(c, f.q()));
    } else {
        throw ParseError("unknown kind: " + kind);
    }
    if (!in.at_end()) {
        // allow exactly one trailing newline, nothing else
        std::string rest = in.next("end of file");
        if (!rest.empty()) throw ParseError("trailing content after the code definition");
        if (!in.at_end()) throw ParseError("trailing content after the code definition");
    }
    return file;
}

LinearCode realize_linear(const QpcFile& file) {
    if (file.kind != QpcFile::Kind::Linear) throw std::invalid_argument("not a linear file");
    const FqMatrix& gen = *file.generator;
    RrefResult rr = rref(gen);
    if (rr.rank != gen.rows()) throw ParseError("generator rows are linearly dependent");
    FqMatrix generator(file.field, 0, gen.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) generator.append_row(rr.mat.row(i));
    LinearCode code{file.field, gen.cols(), generator, nullspace(generator), rr.rank, std::nullopt};
    return code;
}

bool is_target_code(const QpcFile& file) {
    if (file.kind != QpcFile::Kind::Linear) return false;
    if (file.field->q() < 3) return false;
    AffineSpace space(file.field, file.m);
    if (file.generator->rows() != space.n() - file.m - 1) return false;
    RrefResult rr = rref(*file.generator);
    if (rr.rank != file.generator->rows()) return false;
    FqMatrix reduced(file.field, 0, file.generator->cols());
    for (std::size_t i = 0; i < rr.rank; ++i) reduced.append_row(rr.mat.row(i));
    // RREF of a row space is unique, so matrix equality decides span equality
    return reduced == build_target_code(space).generator;
}

SwitchedCode realize_switched(const QpcFile& file) {
    if (file.kind != QpcFile::Kind::Switched) throw std::invalid_argument("not a switched file");
    SwitchContext ctx = make_switch_context(file.field->q(), file.m, file.coord);

    // the stored basis must be the canonical R_i basis bit for bit
    if (!(*file.ri_basis == ctx.ri->basis()))
        throw ParseError("stored R_i basis does not match the canonical basis");

    // the stored extension rows must extend R_i to the code, in file order
    EchelonBasis eb(ctx.ri->basis());
    EchelonBasis code_span(ctx.code.generator);
    for (std::size_t r = 0; r < file.extension->rows(); ++r) {
        if (!code_span.contains(file.extension->row(r)))
            throw ParseError("extension row is not a codeword");
        if (!eb.insert(file.extension->row(r)))
            throw ParseError("extension rows are dependent modulo R_i");
    }
    if (eb.rank() != ctx.code.dim) throw ParseError("extension rows do not span the code");

    std::uint64_t reps_count = ipow_checked(ctx.field->q(), file.extension->rows());
    if (reps_count > kDefaultEnumCap) throw ParseError("coset count too large to realize");
    FqMatrix reps(ctx.field, 0, ctx.code.n);
    for_each_in_span(*file.extension, [&](std::span<const Elem> w) { reps.append_row(w); });

    return SwitchedCode(ctx.code, ctx.ri, *file.extension, std::move(reps), file.lambdas);
}

}  // namespace qpc
