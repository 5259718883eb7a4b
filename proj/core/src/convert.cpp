#include "twocst/convert.hpp"

#include "twocst/breaks.hpp"
#include "twocst/errors.hpp"
#include "twocst/search.hpp"
#include "twocst/validate.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace twocst {

const char* case_name(CaseType c) {
    switch (c) {
    case CaseType::A1: return "a1";
    case CaseType::A2: return "a2";
    case CaseType::B: return "b";
    case CaseType::C1: return "c1";
    case CaseType::C2: return "c2";
    case CaseType::D: return "d";
    case CaseType::E: return "e";
    case CaseType::F: return "f";
    case CaseType::G: return "g";
    case CaseType::H: return "h";
    }
    return "?";
}

Coin RandomCoins::flip() { return (rng_() & 1) != 0 ? Coin::Yes : Coin::No; }

Coin ScriptedCoins::flip() {
    if (next_ >= script_.size())
        throw CoinScriptExhausted{};
    return script_[next_++];
}

namespace {

void require_key_leaf(const NodePtr& node, int key, const char* where) {
    if (!node->is_leaf() || node->leaf.kind != LeafKind::Key || node->leaf.value != key)
        throw InternalError(std::string("classify: case ") + where +
                            " expects the key leaf of " + std::to_string(key));
}

void require_bottom_leaf(const NodePtr& node, const char* where) {
    if (node->leaf.kind != LeafKind::Nil)
        throw InternalError(std::string("classify: case ") + where +
                            " expects an unlabeled bottom leaf");
}

} // namespace

CaseBindings classify(const Tree& tree, std::string_view node_path) {
    const NodePtr node = node_at(tree, node_path);
    if (node->is_leaf() || node->cmp.op != CmpOp::Eq)
        throw std::invalid_argument("classify: node is not an equality node");
    const int b = node->cmp.key;

    CaseBindings bind;
    bind.node_path = std::string(node_path);
    bind.b = b;

    const NodePtr n2 = node->no;
    if (n2->is_leaf()) {
        require_bottom_leaf(n2, "a1");
        bind.type = CaseType::A1;
        bind.break_leaf = n2;
        bind.break_leaf_path = bind.node_path + "N";
        return bind;
    }
    const int k2 = n2->cmp.key;
    if (k2 < b) {
        require_key_leaf(node->yes, b, "b");
        bind.type = CaseType::B;
        bind.diamond = n2->cmp;
        bind.t1 = n2->yes;
        bind.t2 = n2->no;
        return bind;
    }
    if (k2 == b) {
        if (n2->cmp.op != CmpOp::Less)
            throw InternalError("classify: duplicate equality node for key " +
                                std::to_string(b));
        bind.type = CaseType::C1;
        return bind;
    }
    bind.d_key = k2;
    if (n2->cmp.op == CmpOp::Less) {
        const NodePtr n3 = n2->yes;
        if (n3->is_leaf()) {
            require_bottom_leaf(n3, "a2");
            bind.type = CaseType::A2;
            bind.t3 = n2->no;
            bind.break_leaf = n3;
            bind.break_leaf_path = bind.node_path + "NY";
            return bind;
        }
        const int k3 = n3->cmp.key;
        if (k3 < b) {
            require_key_leaf(node->yes, b, "d");
            bind.type = CaseType::D;
            bind.diamond = n3->cmp;
            bind.t1 = n3->yes;
            bind.t2 = n3->no;
            bind.t3 = n2->no;
            return bind;
        }
        if (k3 == b) {
            if (n3->cmp.op != CmpOp::Less)
                throw InternalError("classify: duplicate equality node for key " +
                                    std::to_string(b));
            bind.type = CaseType::C2;
            return bind;
        }
        if (k3 >= k2)
            throw InternalError(
                "classify: walk under a less-than met a key not smaller than it");
        require_key_leaf(node->yes, b, "e/f");
        bind.c_key = k3;
        bind.t2 = n3->no;
        bind.t3 = n2->no;
        bind.t1 = n3->yes;
        if (n3->cmp.op == CmpOp::Less) {
            bind.type = CaseType::E;
        } else {
            require_key_leaf(n3->yes, k3, "f");
            bind.type = CaseType::F;
        }
        return bind;
    }
    require_key_leaf(node->yes, b, "g/h");
    require_key_leaf(n2->yes, k2, "g/h");
    const NodePtr n3 = n2->no;
    if (n3->is_leaf() || n3->cmp.op != CmpOp::Less || n3->cmp.key < k2)
        throw InternalError("classify: an equality node to a larger key must sit "
                            "above a less-than to a key at least as large");
    bind.x_key = n3->cmp.key;
    bind.t1 = n3->yes;
    bind.t2 = n3->no;
    bind.type = n3->cmp.key == k2 ? CaseType::G : CaseType::H;
    return bind;
}

namespace {

//! Rebuilds the subtree with the processed flag set everywhere. A processed
//! node's whole subtree is already flagged, so sharing it back is safe.
NodePtr mark_processed(const NodePtr& node) {
    if (node->processed)
        return node;
    auto copy = std::make_shared<Node>(*node);
    copy->processed = true;
    if (!node->is_leaf()) {
        copy->yes = mark_processed(node->yes);
        copy->no = mark_processed(node->no);
    }
    return copy;
}

[[noreturn]] void stale() {
    throw std::invalid_argument("apply_replacement: bindings do not match the tree");
}

int req(const std::optional<int>& v) {
    if (!v)
        stale();
    return *v;
}

const Comparison& req(const std::optional<Comparison>& v) {
    if (!v)
        stale();
    return *v;
}

NodePtr expect_internal(const NodePtr& node, CmpOp op, int key) {
    if (node->is_leaf() || node->cmp.op != op || node->cmp.key != key)
        stale();
    return node;
}

NodePtr split_by(int key) {
    return make_less(key, make_nil_leaf(), make_nil_leaf());
}

} // namespace

Tree apply_replacement(const Tree& tree, const CaseBindings& bind,
                       std::optional<Coin> coin) {
    if ((bind.type == CaseType::D) != coin.has_value())
        throw std::invalid_argument(bind.type == CaseType::D
                                        ? "apply_replacement: case d needs a coin"
                                        : "apply_replacement: only case d takes a coin");
    const NodePtr node = node_at(tree, bind.node_path);
    if (node->is_leaf() || node->cmp != Comparison{CmpOp::Eq, bind.b} || node->processed)
        stale();
    const int b = bind.b;

    NodePtr sub;
    switch (bind.type) {
    case CaseType::A1: {
        if (!bind.break_leaf || node->no != bind.break_leaf)
            stale();
        sub = make_eq(b, node->yes, split_by(b));
        break;
    }
    case CaseType::A2: {
        const NodePtr n2 = expect_internal(node->no, CmpOp::Less, req(bind.d_key));
        if (!bind.break_leaf || n2->yes != bind.break_leaf || n2->no != bind.t3)
            stale();
        sub = make_eq(b, node->yes, make_less(*bind.d_key, split_by(b), bind.t3));
        break;
    }
    case CaseType::B: {
        const NodePtr n2 = node->no;
        if (n2->is_leaf() || n2->cmp != req(bind.diamond) || n2->yes != bind.t1 ||
            n2->no != bind.t2)
            stale();
        sub = make_less(b, make_internal(*bind.diamond, bind.t1, bind.t2),
                        make_eq(b, node->yes, bind.t2));
        break;
    }
    case CaseType::C1: {
        expect_internal(node->no, CmpOp::Less, b);
        sub = node;
        break;
    }
    case CaseType::C2: {
        const NodePtr n2 = expect_internal(node->no, CmpOp::Less, req(bind.d_key));
        expect_internal(n2->yes, CmpOp::Less, b);
        sub = node;
        break;
    }
    case CaseType::D: {
        const NodePtr n2 = expect_internal(node->no, CmpOp::Less, req(bind.d_key));
        const NodePtr n3 = n2->yes;
        if (n3->is_leaf() || n3->cmp != req(bind.diamond) || n3->yes != bind.t1 ||
            n3->no != bind.t2 || n2->no != bind.t3)
            stale();
        const NodePtr diamond = make_internal(*bind.diamond, bind.t1, bind.t2);
        if (*coin == Coin::Yes)
            sub = make_less(b, diamond,
                            make_eq(b, node->yes,
                                    make_less(*bind.d_key, bind.t2, bind.t3)));
        else
            sub = make_less(*bind.d_key,
                            make_eq(b, node->yes, make_less(b, diamond, bind.t2)),
                            bind.t3);
        break;
    }
    case CaseType::E: {
        const NodePtr n2 = expect_internal(node->no, CmpOp::Less, req(bind.d_key));
        const NodePtr n3 = expect_internal(n2->yes, CmpOp::Less, req(bind.c_key));
        if (n3->yes != bind.t1 || n3->no != bind.t2 || n2->no != bind.t3)
            stale();
        sub = make_less(*bind.c_key,
                        make_eq(b, node->yes, make_less(b, bind.t1, bind.t1)),
                        make_less(*bind.d_key, bind.t2, bind.t3));
        break;
    }
    case CaseType::F: {
        // Less(D) stays above Eq(C) so the atoms beyond D keep their depth;
        // only the converted key pays the extra comparison.
        const NodePtr n2 = expect_internal(node->no, CmpOp::Less, req(bind.d_key));
        const NodePtr n3 = expect_internal(n2->yes, CmpOp::Eq, req(bind.c_key));
        if (n3->yes != bind.t1 || n3->no != bind.t2 || n2->no != bind.t3)
            stale();
        sub = make_less(*bind.c_key,
                        make_eq(b, node->yes, make_less(b, bind.t2, bind.t2)),
                        make_less(*bind.d_key,
                                  make_eq(*bind.c_key, bind.t1, bind.t2), bind.t3));
        break;
    }
    case CaseType::G:
    case CaseType::H: {
        const NodePtr n2 = expect_internal(node->no, CmpOp::Eq, req(bind.d_key));
        const NodePtr n3 = expect_internal(n2->no, CmpOp::Less, req(bind.x_key));
        if (n3->yes != bind.t1 || n3->no != bind.t2)
            stale();
        const NodePtr tail = bind.type == CaseType::G
                                 ? bind.t2
                                 : make_less(*bind.x_key, bind.t1, bind.t2);
        sub = make_less(*bind.d_key,
                        make_eq(b, node->yes, make_less(b, bind.t1, bind.t1)),
                        make_eq(*bind.d_key, n2->yes, tail));
        break;
    }
    }
    return with_subtree(tree, bind.node_path, mark_processed(sub));
}

StepContractReport check_step_contract(const Tree& before, const Tree& after,
                                       const CaseBindings& bind,
                                       const Instance& instance) {
    StepContractReport report;
    const int n = instance.n();

    const ValidationReport v = validate(after, instance, TreeKind::Nil);
    if (!v.correct)
        report.violations.push_back(
            "result is not a correct bottom-leaf tree: " +
            (v.violations.empty() ? std::string("unknown") : v.violations.front()));

    for (const std::string& lp : leaf_paths(after)) {
        if (has_break(after, n, lp, bind.b)) {
            report.violations.push_back("leaf " + lp + " keeps a break due to key " +
                                        std::to_string(bind.b));
            break;
        }
    }

    const std::vector<int> db = depth_vector(before, n);
    const std::vector<int> da = depth_vector(after, n);
    const int b_index = Atom::key(bind.b).index();
    const auto complain = [&](int idx, const char* what) {
        report.violations.push_back("atom " + atom_label(Atom::from_index(idx)) +
                                    " " + what + " (depth " +
                                    std::to_string(db[idx]) + " -> " +
                                    std::to_string(da[idx]) + ")");
    };

    switch (bind.type) {
    case CaseType::A1:
    case CaseType::A2: {
        const AtomMask split = query_mask(before, n, bind.break_leaf_path);
        for (int idx = 0; idx < atom_count(n); ++idx) {
            const int expected = db[idx] + (((split >> idx) & 1) != 0 ? 1 : 0);
            if (da[idx] != expected)
                complain(idx, "missed the split-leaf depth contract");
        }
        if (bind.break_leaf && bind.break_leaf->processed)
            report.violations.push_back(
                "split leaf lies inside a subtree installed by an earlier step");
        break;
    }
    case CaseType::C1:
    case CaseType::C2:
        for (int idx = 0; idx < atom_count(n); ++idx)
            if (da[idx] != db[idx])
                complain(idx, "changed depth in an identity step");
        break;
    case CaseType::B:
    case CaseType::E:
    case CaseType::F:
    case CaseType::G:
    case CaseType::H:
        for (int idx = 0; idx < atom_count(n); ++idx) {
            if (idx == b_index) {
                if (da[idx] != db[idx] + 1)
                    complain(idx, "is the converted key and must gain exactly one");
            } else if (da[idx] > db[idx]) {
                complain(idx, "got deeper");
            }
        }
        break;
    case CaseType::D:
        for (int idx = 0; idx < atom_count(n); ++idx) {
            if (idx == b_index) {
                if (da[idx] != db[idx] + 1)
                    complain(idx, "is the converted key and must gain exactly one");
            } else if (da[idx] > db[idx] + 1 || da[idx] < db[idx] - 1) {
                complain(idx, "moved by more than one");
            }
        }
        break;
    }
    return report;
}

StepContractReport check_d_pair(const Tree& before, const CaseBindings& bind,
                                const Instance& instance) {
    if (bind.type != CaseType::D)
        throw std::invalid_argument("check_d_pair: bindings are not a case d step");
    const Tree yes = apply_replacement(before, bind, Coin::Yes);
    const Tree no = apply_replacement(before, bind, Coin::No);

    StepContractReport report = check_step_contract(before, yes, bind, instance);
    for (std::string& v : check_step_contract(before, no, bind, instance).violations)
        report.violations.push_back(std::move(v));

    const int n = instance.n();
    const std::vector<int> db = depth_vector(before, n);
    const std::vector<int> dy = depth_vector(yes, n);
    const std::vector<int> dn = depth_vector(no, n);
    const int b_index = Atom::key(bind.b).index();
    for (int idx = 0; idx < atom_count(n); ++idx) {
        if (idx == b_index)
            continue;
        if ((dy[idx] - db[idx]) + (dn[idx] - db[idx]) != 0)
            report.violations.push_back("atom " + atom_label(Atom::from_index(idx)) +
                                        " changes depth on average over the coins");
    }
    return report;
}

namespace {

struct Processor {
    Tree state;
    const Instance& instance;
    CoinSource& coins;
    const ProcessOptions& options;
    ConversionTrace trace;

    void run(const std::string& path) {
        if (node_at(state, path)->is_leaf())
            return;
        run(path + "Y");
        run(path + "N");
        const NodePtr node = node_at(state, path);
        if (node->cmp.op != CmpOp::Eq || node->processed)
            return;
        const CaseBindings bind = classify(state, path);
        std::optional<Coin> coin;
        if (bind.type == CaseType::D)
            coin = coins.flip();
        const Tree before = state;
        state = apply_replacement(state, bind, coin);
        if (options.check_contracts) {
            const StepContractReport r =
                check_step_contract(before, state, bind, instance);
            if (!r.ok())
                throw InternalError("conversion step broke its contract: " +
                                    r.violations.front());
        }
        trace.steps.push_back({path, bind.type, coin});
    }
};

//! Every surviving bottom leaf must cover exactly one interval; label it.
Tree relabel_bottom_leaves(const Tree& tree, int n) {
    Tree out = tree;
    for (const std::string& lp : leaf_paths(tree)) {
        if (node_at(tree, lp)->leaf.kind != LeafKind::Nil)
            continue;
        const AtomMask mask = query_mask(tree, n, lp);
        if (std::popcount(mask) != 1)
            throw InternalError("conversion left a bottom leaf covering " +
                                std::to_string(std::popcount(mask)) + " atoms");
        const int idx = std::countr_zero(mask);
        if (idx % 2 != 0)
            throw InternalError("conversion left a key on a bottom leaf");
        out = with_subtree(out, lp, make_interval_leaf(idx / 2));
    }
    return out;
}

} // namespace

ProcessResult process(const Tree& nil_tree, const Instance& instance,
                      CoinSource& coins, const ProcessOptions& options) {
    const int n = instance.n();
    const ValidationReport v = validate(nil_tree, instance, TreeKind::Nil);
    if (!v.correct)
        throw InvalidTreeError(
            "process: input is not a correct bottom-leaf tree: " +
            (v.violations.empty() ? std::string("unknown") : v.violations.front()));
    if (v.redundant())
        throw InvalidTreeError("process: input tree has redundant nodes");
    for (const std::string& lp : leaf_paths(nil_tree))
        if (node_at(nil_tree, lp)->leaf.kind == LeafKind::Interval)
            throw InvalidTreeError(
                "process: input intervals must sit on unlabeled bottom leaves");

    Processor p{nil_tree, instance, coins, options, {coins.seed(), {}}};
    p.run("");

    Tree result = prune_redundant(p.state, n);
    result = relabel_bottom_leaves(result, n);
    if (count_leaves(result) != atom_count(n))
        throw InternalError("conversion did not end with one leaf per atom");
    const ValidationReport after = validate(result, instance, TreeKind::Loc);
    if (!after.correct || after.redundant())
        throw InternalError("conversion produced an invalid located tree");
    return {std::move(result), std::move(p.trace)};
}

} // namespace twocst
