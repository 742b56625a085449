#include "isogame/residual.hpp"

#include <string>

namespace isogame {

ResidualGraph ResidualGraph::compute(const Graph& g, VertexSet selected) {
  ResidualGraph r;
  r.g_ = &g;
  r.selected_ = selected;
  r.recolor(0);
  return r;
}

void ResidualGraph::recolor(int stage_of_move) {
  const Graph& g = *g_;
  dominated_ = g.closed_neighborhood(selected_);
  VertexSet white = white_set(g, dominated_);
  VertexSet blue, light;
  for (int v : dominated_)
    if (g.open_neighborhood(v).intersects(white)) {
      // light blue survives recoloring; new blues are light exactly when
      // the move carrying them belongs to stage 2
      if (light_blue_.contains(v))
        light.add(v);
      else if (blue_.contains(v) || stage_of_move != 2)
        blue.add(v);
      else
        light.add(v);
    }
  white_ = white;
  blue_ = blue;
  light_blue_ = light;
  for (int v = 0; v < g.order(); ++v) color_[v] = Color::Red;
  for (int v : white_) color_[v] = Color::White;
  for (int v : blue_) color_[v] = Color::Blue;
  for (int v : light_blue_) color_[v] = Color::LightBlue;
}

void ResidualGraph::update(int v, int stage) {
  if (stage < 1 || stage > 3)
    throw std::invalid_argument("stage must be 1, 2 or 3, got " + std::to_string(stage));
  if (stage < stage_)
    throw std::logic_error("stage went backwards: " + std::to_string(stage_) + " -> " +
                           std::to_string(stage));
  if (!playable(*g_, dominated_).contains(v))
    throw IllegalMove("vertex " + std::to_string(v) + " is not playable");
  stage_ = stage;
  selected_.add(v);
  recolor(stage);
}

void ResidualGraph::set_stage(int stage) {
  if (stage < 1 || stage > 3)
    throw std::invalid_argument("stage must be 1, 2 or 3, got " + std::to_string(stage));
  if (stage < stage_)
    throw std::logic_error("stage went backwards: " + std::to_string(stage_) + " -> " +
                           std::to_string(stage));
  stage_ = stage;
}

int ResidualGraph::weight() const {
  if (stage_ == 0) throw std::logic_error("weight needs a stage; call set_stage or update first");
  if (stage_ == 1) return 5 * white_.count() + 3 * (blue_ | light_blue_).count();
  return 5 * white_.count() + 3 * blue_.count() + light_blue_.count();
}

VertexSet ResidualGraph::red() const {
  return g_->vertices() - white_ - blue_ - light_blue_;
}

int ResidualGraph::residual_degree(int v) const {
  if (white_.contains(v)) return g_->degree(v);
  return (g_->open_neighborhood(v) & white_).count();
}

std::vector<std::pair<int, int>> ResidualGraph::residual_edges() const {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g_->edges())
    if (white_.contains(u) || white_.contains(v)) out.emplace_back(u, v);
  return out;
}

Classification classify(const ResidualGraph& r) {
  Classification c;
  bool any_big = false, all_special = true;
  for (VertexSet comp : components(r.base(), r.white())) {
    WhiteComponent info;
    info.vertices = comp;
    int size = comp.count();
    if (size >= 4) {
      info.big = true;
      any_big = true;
      all_special = false;
    } else {
      int edge_count = 0;
      for (int v : comp) edge_count += (r.base().open_neighborhood(v) & comp).count();
      edge_count /= 2;
      if (!((size == 2 && edge_count == 1) || (size == 3 && edge_count == 2)))
        throw std::runtime_error("small white component on " + comp.to_string() +
                                 " is neither a P2 nor a P3");
      if (size == 2) {
        info.special = true;
        for (int v : comp)
          for (int b : r.base().open_neighborhood(v) - comp)
            if (r.residual_degree(b) != 1) info.special = false;
      }
      if (!info.special) all_special = false;
    }
    c.components.push_back(info);
  }
  c.stage = any_big ? 1 : (all_special ? 3 : 2);
  return c;
}

StagedReplay replay_staged(const Graph& tree, const GameTrace& trace) {
  if (!is_tree(tree)) throw std::invalid_argument("staged replay is defined on trees");
  StagedReplay out;
  out.initial_weight = 5 * tree.order();
  ResidualGraph r = ResidualGraph::compute(tree, VertexSet());
  int previous_stage = 0;
  int classified_before = 0;
  for (int i = 0; i < trace.length(); ++i) {
    int position_stage = classify(r).stage;
    if (position_stage < classified_before) out.stages_monotone = false;
    classified_before = position_stage;
    Player mover = trace.mover(i);
    // Staller's move counts toward the stage Dominator last played in
    int stage = (mover == Player::Staller && previous_stage != 0) ? previous_stage
                                                                  : position_stage;
    r.set_stage(stage);
    int before = r.weight();
    r.update(trace.moves[i], stage);
    int xi = before - r.weight();
    out.moves.push_back(StagedMove{trace.moves[i], mover, stage, xi});
    previous_stage = stage;
  }
  out.final_weight = trace.length() == 0 ? out.initial_weight : r.weight();
  return out;
}

}  // namespace isogame
