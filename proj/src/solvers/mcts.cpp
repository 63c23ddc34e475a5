#include "ast/solvers/mcts.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ast {

void MctsConfig::validate() const {
    if (!(exploration_constant >= 0.0)) {
        throw std::invalid_argument("MctsConfig: exploration_constant must be >= 0");
    }
    if (!(widening_k > 0.0)) throw std::invalid_argument("MctsConfig: widening_k must be > 0");
    if (!(widening_alpha > 0.0 && widening_alpha < 1.0)) {
        throw std::invalid_argument("MctsConfig: widening_alpha must lie in (0,1)");
    }
    if (max_iterations < 1) throw std::invalid_argument("MctsConfig: max_iterations must be >= 1");
    if (rollout_depth_limit < 1) {
        throw std::invalid_argument("MctsConfig: rollout_depth_limit must be >= 1");
    }
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ActionEdge {
    EnvironmentAction action;
    long visits = 0;
    // Best finite return observed through this edge. Max backup rather than
    // mean: the search target is the single best trajectory, and a max-backed
    // tree keeps resampling suffixes of its elite lines.
    bool seen_finite = false;
    double best_return = kNegInf;
    // Successor state nodes keyed by snapshot; deterministic scenarios only
    // ever populate one entry per edge.
    std::vector<std::pair<std::string, int>> successors;
};

struct StateNode {
    long visits = 0;
    // Running range of finite returns backed up through this node. Q values
    // are normalized against the local range: deep along an elite line the
    // range tightens, so small log-likelihood differences between failure
    // trajectories stay visible to the selection rule instead of being
    // squashed by the alpha-scale penalty spread.
    double return_min = std::numeric_limits<double>::max();
    double return_max = std::numeric_limits<double>::lowest();
    std::vector<ActionEdge> edges;
};

class Tree {
public:
    explicit Tree(const MctsConfig& cfg) : cfg_(cfg) { nodes_.emplace_back(); }

    StateNode& node(int idx) { return nodes_[idx]; }

    bool may_widen(const StateNode& n) const {
        const double cap =
            cfg_.widening_k * std::pow(static_cast<double>(std::max<long>(1, n.visits)),
                                       cfg_.widening_alpha);
        return static_cast<double>(n.edges.size()) < cap;
    }

    int select_edge(const StateNode& n) const {
        const double log_visits = std::log(static_cast<double>(std::max<long>(1, n.visits)));
        int best = 0;
        double best_score = kNegInf;
        for (std::size_t i = 0; i < n.edges.size(); ++i) {
            const ActionEdge& e = n.edges[i];
            const double q = e.seen_finite ? normalized(n, e.best_return) : 0.0;
            const double bonus =
                cfg_.exploration_constant *
                std::sqrt(log_visits / static_cast<double>(std::max<long>(1, e.visits)));
            const double score = q + bonus;
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(i);
            }
        }
        return best;
    }

    // Returns the successor node index for (edge, state_key), creating it if
    // unseen. created reports whether this visit expanded the tree. Indices
    // rather than references: growing nodes_ invalidates node references.
    int successor(int node_idx, int edge_idx, const std::string& state_key, bool& created) {
        for (const auto& [key, idx] : nodes_[node_idx].edges[edge_idx].successors) {
            if (key == state_key) {
                created = false;
                return idx;
            }
        }
        nodes_.emplace_back();
        const int idx = static_cast<int>(nodes_.size()) - 1;
        nodes_[node_idx].edges[edge_idx].successors.emplace_back(state_key, idx);
        created = true;
        return idx;
    }

    static void record_return(StateNode& n, double value) {
        if (!std::isfinite(value)) return;
        if (value < n.return_min) n.return_min = value;
        if (value > n.return_max) n.return_max = value;
    }

private:
    static double normalized(const StateNode& n, double value) {
        if (n.return_max <= n.return_min) return 0.5;
        return std::clamp((value - n.return_min) / (n.return_max - n.return_min), 0.0, 1.0);
    }

    const MctsConfig& cfg_;
    std::vector<StateNode> nodes_;
};

// Proposes a widening action. For finite action sets the proposal is drawn
// from the natural distribution but restricted to actions not yet expanded;
// falls back to declaration order if sampling keeps hitting duplicates.
bool propose_action(const Simulator& sim, const StateNode& n,
                    const std::vector<EnvironmentAction>& discrete, std::mt19937_64& rng,
                    EnvironmentAction& out) {
    auto expanded = [&n](const EnvironmentAction& a) {
        for (const auto& e : n.edges) {
            if (e.action == a) return true;
        }
        return false;
    };
    if (!discrete.empty()) {
        if (n.edges.size() >= discrete.size()) return false;
        for (int attempt = 0; attempt < 16; ++attempt) {
            EnvironmentAction candidate = sim.sample_natural_action(rng);
            if (!expanded(candidate)) {
                out = std::move(candidate);
                return true;
            }
        }
        for (const auto& candidate : discrete) {
            if (!expanded(candidate)) {
                out = candidate;
                return true;
            }
        }
        return false;
    }
    EnvironmentAction candidate = sim.sample_natural_action(rng);
    if (expanded(candidate)) return false;
    out = std::move(candidate);
    return true;
}

} // namespace

SolverReport solve_mcts(Simulator& sim, const RewardSpec& spec, const MctsConfig& cfg) {
    cfg.validate();
    spec.validate();

    const int horizon = sim.horizon();
    const auto discrete = sim.discrete_actions();
    std::mt19937_64 rng(cfg.rng_seed);
    Tree tree(cfg);
    detail::ReportAccumulator acc;

    struct PathEntry {
        int node;
        int edge;
    };
    std::vector<PathEntry> path;

    for (long iteration = 0; iteration < cfg.max_iterations; ++iteration) {
        if (cfg.max_sim_steps > 0 && acc.peek().sim_steps_used >= cfg.max_sim_steps) break;

        sim.initialize();
        Trajectory trajectory;
        path.clear();
        int node_idx = 0;
        int t = 0;
        bool in_tree = true;

        while (!sim.is_terminal() && t < cfg.rollout_depth_limit) {
            EnvironmentAction action;
            int edge_idx = -1;
            if (in_tree) {
                StateNode& n = tree.node(node_idx);
                EnvironmentAction proposal;
                if ((n.edges.empty() || tree.may_widen(n)) &&
                    propose_action(sim, n, discrete, rng, proposal)) {
                    n.edges.push_back(ActionEdge{std::move(proposal), 0, false, kNegInf, {}});
                    edge_idx = static_cast<int>(n.edges.size()) - 1;
                } else {
                    edge_idx = tree.select_edge(n);
                }
                action = tree.node(node_idx).edges[edge_idx].action;
            } else {
                action = sim.sample_natural_action(rng);
            }

            StepOutcome outcome = sim.step(action);
            ++t;
            const double reward = reward_step_outcome(spec, outcome, t, horizon);
            trajectory.append(TrajectoryStep{sim.state_blob(), action, reward,
                                             outcome.action_log_likelihood, outcome.event,
                                             outcome.terminal});

            if (in_tree) {
                path.push_back(PathEntry{node_idx, edge_idx});
                bool created = false;
                node_idx = tree.successor(node_idx, edge_idx, trajectory.steps.back().state_blob,
                                          created);
                // A freshly expanded node ends the tree policy; the rest of
                // the episode is a default-policy rollout.
                if (created) in_tree = false;
            }
            if (outcome.terminal) break;
        }

        const double episode_return = trajectory.total_reward;
        for (const auto& entry : path) {
            StateNode& n = tree.node(entry.node);
            ++n.visits;
            Tree::record_return(n, episode_return);
            ActionEdge& e = n.edges[entry.edge];
            ++e.visits;
            if (std::isfinite(episode_return) && episode_return > e.best_return) {
                e.seen_finite = true;
                e.best_return = episode_return;
            }
        }

        acc.add_sim_steps(trajectory.length());
        acc.add(std::move(trajectory));
    }
    return acc.take();
}

} // namespace ast
