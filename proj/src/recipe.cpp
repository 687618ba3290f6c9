#include "rcalg/recipe.hpp"
#include "rcalg/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <numeric>

namespace rcalg {

RingPtr make_ring(int n, uint32_t p)
{
    if (n < 1)
        throw ParamError("need at least one variable");
    return std::make_shared<RingCtx>(n, PrimeField(p));
}

namespace {

struct Node
{
    enum Kind { CALL, NUMBER, STRING } kind = CALL;
    std::string name;
    long long number = 0;
    std::vector<Node> args;
};

class Parser
{
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Node parse()
    {
        Node n = expr();
        skip();
        if (pos_ != s_.size())
            fail("trailing input");
        return n;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what)
    {
        throw ParseError("recipe: " + what + " at position " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    Node expr()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        Node n;
        char c = s_[pos_];
        if (c == '"') {
            n.kind = Node::STRING;
            size_t end = s_.find('"', pos_ + 1);
            if (end == std::string::npos)
                fail("unterminated string");
            n.name = s_.substr(pos_ + 1, end - pos_ - 1);
            pos_ = end + 1;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            size_t start = pos_;
            if (c == '-')
                ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ == start + (c == '-' ? 1 : 0))
                fail("expected a number");
            n.kind = Node::NUMBER;
            n.number = std::stoll(s_.substr(start, pos_ - start));
            return n;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-'))
            ++pos_;
        if (pos_ == start)
            fail(std::string("unexpected character '") + c + "'");
        n.name = s_.substr(start, pos_ - start);
        skip();
        if (pos_ >= s_.size() || s_[pos_] != '(')
            fail("expected '(' after " + n.name);
        ++pos_;
        skip();
        if (pos_ < s_.size() && s_[pos_] == ')') {
            ++pos_;
            return n;
        }
        for (;;) {
            n.args.push_back(expr());
            skip();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < s_.size() && s_[pos_] == ')') {
                ++pos_;
                return n;
            }
            fail("expected ',' or ')'");
        }
    }
};

struct Value
{
    bool dual = false;
    GradedIdeal ideal;
    std::vector<HomogPoly> forms;
};

class Evaluator
{
public:
    Evaluator(RingPtr ring, uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

    std::vector<std::string> warnings;
    GradedIdeal last_ci, last_source;

    Value eval(const Node& n)
    {
        if (n.kind != Node::CALL)
            throw ParseError("recipe: expected a construction, got a literal");
        const RingCtx& R = *ring_;
        Value v;
        if (n.name == "general-forms" || n.name == "ci") {
            std::vector<HomogPoly> g;
            for (int d : degrees(n, 0))
                g.push_back(random_form(R, d, rng_));
            v.ideal = GradedIdeal(ring_, std::move(g));
        }
        else if (n.name == "monomial-ci") {
            auto d = degrees(n, 0);
            if (static_cast<int>(d.size()) > R.n())
                throw ParamError("monomial-ci: more degrees than variables");
            std::vector<HomogPoly> g;
            for (size_t i = 0; i < d.size(); ++i) {
                Exponents e(R.n(), 0);
                e[i] = d[i];
                g.push_back(monomial_poly(R, e));
            }
            v.ideal = GradedIdeal(ring_, std::move(g));
        }
        else if (n.name == "mpower") {
            if (n.args.size() != 1)
                throw ParseError("mpower takes one degree");
            int k = static_cast<int>(number(n.args[0]));
            std::vector<HomogPoly> g;
            for (const auto& e : R.basis(k).monomials)
                g.push_back(monomial_poly(R, e));
            v.ideal = GradedIdeal(ring_, std::move(g));
        }
        else if (n.name == "ideal" || n.name == "dual") {
            std::vector<HomogPoly> g;
            for (const auto& a : n.args) {
                if (a.kind != Node::STRING)
                    throw ParseError(n.name + ": arguments must be quoted polynomials");
                g.push_back(parse_poly(R, a.name));
            }
            if (n.name == "dual") {
                v.dual = true;
                v.forms = std::move(g);
            }
            else {
                v.ideal = GradedIdeal(ring_, std::move(g));
            }
        }
        else if (n.name == "sum") {
            std::vector<HomogPoly> g;
            for (const auto& a : n.args) {
                Value x = ideal_arg(a);
                g.insert(g.end(), x.ideal.gens.begin(), x.ideal.gens.end());
            }
            v.ideal = GradedIdeal(ring_, std::move(g));
        }
        else if (n.name == "link") {
            if (n.args.size() != 2)
                throw ParseError("link takes a complete intersection and an ideal");
            Value x = ideal_arg(n.args[1]);
            GradedIdeal c;
            if (n.args[0].kind == Node::CALL && n.args[0].name == "ci") {
                std::vector<HomogPoly> g;
                for (int d : degrees(n.args[0], 0))
                    g.push_back(general_element(x.ideal, d, rng_));
                c = GradedIdeal(ring_, std::move(g));
            }
            else {
                c = ideal_arg(n.args[0]).ideal;
            }
            check_ci(c);
            v.ideal = ideal_quotient(c, x.ideal);
            last_ci = c;
            last_source = x.ideal;
        }
        else if (n.name == "ann") {
            if (n.args.size() != 1)
                throw ParseError("ann takes one dual argument");
            Value d = eval(n.args[0]);
            if (!d.dual)
                throw ParseError("ann needs dual forms (dual or perp-pick)");
            AnnihilatorResult a = annihilator_ideal(ring_, d.forms);
            warnings.insert(warnings.end(), a.warnings.begin(), a.warnings.end());
            v.ideal = std::move(a.ideal);
        }
        else if (n.name == "perp-pick") {
            if (n.args.size() != 3)
                throw ParseError("perp-pick takes a degree, a count and an ideal");
            int s = static_cast<int>(number(n.args[0]));
            long long c = number(n.args[1]);
            Value x = ideal_arg(n.args[2]);
            std::vector<HomogPoly> basis = perp_basis(x.ideal, s);
            if (basis.empty())
                throw ParamError("perp-pick: the ideal is everything in degree " + std::to_string(s));
            v.dual = true;
            for (long long k = 0; k < c; ++k) {
                HomogPoly f = zero_poly(R, s);
                for (const auto& b : basis)
                    f = add(R, f, scale(R, b, rng_.uniform(R.field().p)));
                v.forms.push_back(std::move(f));
            }
        }
        else {
            throw ParseError("recipe: unknown construction '" + n.name + "'");
        }
        return v;
    }

private:
    RingPtr ring_;
    FieldRng rng_;

    static long long number(const Node& n)
    {
        if (n.kind != Node::NUMBER)
            throw ParseError("recipe: expected a number");
        return n.number;
    }

    static std::vector<int> degrees(const Node& n, size_t from)
    {
        std::vector<int> d;
        for (size_t k = from; k < n.args.size(); ++k) {
            long long x = number(n.args[k]);
            if (x < 0)
                throw DegreeError(n.name + ": negative degree");
            d.push_back(static_cast<int>(x));
        }
        return d;
    }

    Value ideal_arg(const Node& n)
    {
        Value v = eval(n);
        if (v.dual)
            throw ParseError("recipe: expected an ideal, got dual forms");
        return v;
    }

    void check_ci(GradedIdeal& c) const
    {
        const int n = ring_->n();
        if (static_cast<int>(c.gens.size()) != n)
            throw NotLinkedError("a linking ideal needs exactly n generators");
        auto d = c.degrees();
        int top = std::accumulate(d.begin(), d.end(), 0) - n + 1;
        auto q = quotient_basis(c, top + 1);
        if (!(q->hilbert() == rational_series(d, n, top + 1)))
            throw NotLinkedError("the linking generators are not a complete intersection");
        c.known_quotient = q;
    }
};

} // namespace

RecipeResult evaluate_recipe(RingPtr ring, const std::string& recipe, uint64_t seed)
{
    Node root = Parser(recipe).parse();
    Evaluator ev(ring, seed);
    Value v = ev.eval(root);
    if (v.dual)
        throw ParseError("recipe: the result must be an ideal (wrap dual forms in ann)");
    RecipeResult r;
    r.ideal = std::move(v.ideal);
    r.warnings = std::move(ev.warnings);
    if (root.name == "link") {
        r.is_link = true;
        r.link_ci = ev.last_ci;
        r.link_source = ev.last_source;
    }
    r.ideal.provenance = Provenance{seed, {recipe}};
    return r;
}

GradedIdeal load_witness(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness: ") + e.what());
    }
    try {
        RingPtr ring = make_ring(j.at("n").get<int>(), j.at("p").get<uint32_t>());
        std::vector<HomogPoly> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back(parse_poly(*ring, g.get<std::string>()));
        Provenance p{j.at("seed").get<uint64_t>(), j.at("recipe").get<std::vector<std::string>>()};
        return GradedIdeal(ring, std::move(gens), p);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness: ") + e.what());
    }
}

} // namespace rcalg
