#include "painleve/vars.hpp"

#include <cassert>
#include <map>

namespace painleve {

namespace {
struct Pool {
  std::vector<std::string> names;
  std::vector<bool> param;
  std::map<std::string, VarId> index;
};
Pool& pool() {
  static Pool p;
  return p;
}
VarId intern(const std::string& name, bool is_param) {
  assert(!name.empty());
  auto& p = pool();
  auto it = p.index.find(name);
  if (it != p.index.end()) {
    if (is_param) p.param[it->second] = true;
    return it->second;
  }
  VarId v = (VarId)p.names.size();
  p.names.push_back(name);
  p.param.push_back(is_param);
  p.index.emplace(name, v);
  return v;
}
}  // namespace

VarId vid(const std::string& name) { return intern(name, false); }
VarId pid(const std::string& name) { return intern(name, true); }

const std::string& var_name(VarId v) { return pool().names.at(v); }
bool var_is_param(VarId v) { return pool().param.at(v); }
bool var_exists(const std::string& name) { return pool().index.count(name) > 0; }

bool var_less(VarId a, VarId b) {
  if (a == b) return false;
  return pool().names[a] < pool().names[b];
}

}  // namespace painleve
