#include "twocst/io.hpp"

#include "twocst/errors.hpp"
#include "twocst/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace twocst {

using json = nlohmann::ordered_json;

namespace {

json must_parse(const std::string& text) {
    json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded())
        throw ParseError("invalid JSON");
    return parsed;
}

Rat rational_field(const json& value, const char* where) {
    if (!value.is_string())
        throw ParseError(std::string("expected a rational string in ") + where);
    return parse_rational(value.get<std::string>());
}

} // namespace

Instance parse_instance(const std::string& text) {
    const json doc = must_parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("beta") ||
        !doc.contains("alpha"))
        throw ParseError("instance needs fields n, beta, alpha");
    if (!doc["n"].is_number_integer())
        throw ParseError("instance field n must be an integer");
    const int n = doc["n"].get<int>();
    if (!doc["beta"].is_array() || !doc["alpha"].is_array())
        throw ParseError("instance fields beta and alpha must be arrays");
    std::vector<Rat> beta, alpha;
    for (const auto& b : doc["beta"])
        beta.push_back(rational_field(b, "beta"));
    for (const auto& a : doc["alpha"])
        alpha.push_back(rational_field(a, "alpha"));
    try {
        return Instance::create(n, std::move(beta), std::move(alpha));
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    doc["n"] = instance.n();
    json beta = json::array();
    for (const Rat& b : instance.beta())
        beta.push_back(format_rational(b));
    json alpha = json::array();
    for (const Rat& a : instance.alpha())
        alpha.push_back(format_rational(a));
    doc["beta"] = std::move(beta);
    doc["alpha"] = std::move(alpha);
    return doc.dump();
}

namespace {

NodePtr tree_from_json(const json& doc) {
    if (!doc.is_object())
        throw ParseError("tree node must be an object");
    if (doc.contains("leaf")) {
        const std::string kind = doc["leaf"].is_string() ? doc["leaf"].get<std::string>()
                                                         : std::string();
        if (kind == "nil")
            return make_nil_leaf();
        if (kind == "key") {
            if (!doc.contains("key") || !doc["key"].is_number_integer())
                throw ParseError("key leaf needs an integer field key");
            const int key = doc["key"].get<int>();
            if (key < 1)
                throw ParseError("key leaf label must be >= 1");
            return make_key_leaf(key);
        }
        if (kind == "interval") {
            if (!doc.contains("i") || !doc["i"].is_number_integer())
                throw ParseError("interval leaf needs an integer field i");
            const int i = doc["i"].get<int>();
            if (i < 0)
                throw ParseError("interval leaf index must be >= 0");
            return make_interval_leaf(i);
        }
        throw ParseError("unknown leaf kind '" + kind + "'");
    }
    if (!doc.contains("op") || !doc.contains("key") || !doc.contains("yes") ||
        !doc.contains("no"))
        throw ParseError("internal node needs fields op, key, yes, no");
    const std::string op = doc["op"].is_string() ? doc["op"].get<std::string>()
                                                 : std::string();
    if (op != "eq" && op != "less")
        throw ParseError("node op must be \"eq\" or \"less\"");
    if (!doc["key"].is_number_integer())
        throw ParseError("node field key must be an integer");
    const int key = doc["key"].get<int>();
    if (key < 1)
        throw ParseError("comparison key must be >= 1");
    return make_internal({op == "eq" ? CmpOp::Eq : CmpOp::Less, key},
                         tree_from_json(doc["yes"]), tree_from_json(doc["no"]));
}

json tree_to_json(const NodePtr& node) {
    json doc;
    if (node->is_leaf()) {
        switch (node->leaf.kind) {
        case LeafKind::Key:
            doc["leaf"] = "key";
            doc["key"] = node->leaf.value;
            break;
        case LeafKind::Interval:
            doc["leaf"] = "interval";
            doc["i"] = node->leaf.value;
            break;
        case LeafKind::Nil:
            doc["leaf"] = "nil";
            break;
        }
        return doc;
    }
    doc["op"] = node->cmp.op == CmpOp::Eq ? "eq" : "less";
    doc["key"] = node->cmp.key;
    doc["yes"] = tree_to_json(node->yes);
    doc["no"] = tree_to_json(node->no);
    return doc;
}

} // namespace

Tree parse_tree(const std::string& text) { return Tree{tree_from_json(must_parse(text))}; }

std::string serialize_tree(const Tree& tree) { return tree_to_json(tree.root).dump(); }

ConversionTrace parse_trace(const std::string& text) {
    const json doc = must_parse(text);
    if (!doc.is_object() || !doc.contains("seed") || !doc.contains("steps"))
        throw ParseError("trace needs fields seed and steps");
    ConversionTrace trace;
    if (doc["seed"].is_number_unsigned())
        trace.seed = doc["seed"].get<std::uint64_t>();
    else if (!doc["seed"].is_null())
        throw ParseError("trace seed must be a non-negative integer or null");
    if (!doc["steps"].is_array())
        throw ParseError("trace steps must be an array");
    for (const auto& s : doc["steps"]) {
        if (!s.is_object() || !s.contains("path") || !s.contains("case") ||
            !s.contains("coin"))
            throw ParseError("trace step needs fields path, case, coin");
        ConvertStep step;
        if (!s["path"].is_string())
            throw ParseError("trace step path must be a string");
        step.path = s["path"].get<std::string>();
        if (step.path.find_first_not_of("YN") != std::string::npos)
            throw ParseError("trace step path must use characters Y and N only");
        const std::string name = s["case"].is_string() ? s["case"].get<std::string>()
                                                       : std::string();
        bool found = false;
        for (CaseType c : {CaseType::A1, CaseType::A2, CaseType::B, CaseType::C1,
                           CaseType::C2, CaseType::D, CaseType::E, CaseType::F,
                           CaseType::G, CaseType::H}) {
            if (name == case_name(c)) {
                step.type = c;
                found = true;
                break;
            }
        }
        if (!found)
            throw ParseError("unknown trace case '" + name + "'");
        if (s["coin"].is_string()) {
            const std::string coin = s["coin"].get<std::string>();
            if (coin == "yes")
                step.coin = Coin::Yes;
            else if (coin == "no")
                step.coin = Coin::No;
            else
                throw ParseError("trace coin must be \"yes\", \"no\", or null");
        }
        else if (!s["coin"].is_null()) {
            throw ParseError("trace coin must be \"yes\", \"no\", or null");
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

std::string serialize_trace(const ConversionTrace& trace) {
    json doc;
    if (trace.seed)
        doc["seed"] = *trace.seed;
    else
        doc["seed"] = nullptr;
    json steps = json::array();
    for (const ConvertStep& step : trace.steps) {
        json s;
        s["path"] = step.path;
        s["case"] = case_name(step.type);
        if (step.coin)
            s["coin"] = *step.coin == Coin::Yes ? "yes" : "no";
        else
            s["coin"] = nullptr;
        steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    return doc.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << content;
    if (!out.good())
        throw ParseError("write to '" + path + "' failed");
}

} // namespace twocst
