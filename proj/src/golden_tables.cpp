#include "momentcone/golden.hpp"

namespace momentcone {

const std::vector<EdgeCountRow>& golden_edge_counts() {
  static const std::vector<EdgeCountRow> rows = {
      {2, 2, 2, 2, {3, 2}},
      {3, 3, 42, 36, {17, 10}},
      {4, 4, 24024, 6660, {457, 233}},
  };
  return rows;
}

const std::vector<StageCountRow>& golden_stage_counts() {
  static const std::vector<StageCountRow> rows = {
      {2, 2, 2, {7, 3}, {11, 5}, {9, 3}, {9, 3}, {6, 2}, {5, 3}},
      {3, 3, 3, {51, 17}, {67, 25}, {192, 41}, {114, 25}, {45, 10}, {33, 11}},
      {4, 4, 4, {3027, 600}, {2231, 484}, {32406, 5633}, {1749, 323}, {270, 50}, {328, 65}},
  };
  return rows;
}

// rows of the (4,4,4) ray table, |lambda_A| = 1
const std::vector<GoldenRay>& golden_rays_444() {
  static const std::vector<GoldenRay> rows = {
      {1, "1/4,1/4,1/4,1/4", "1/4,1/4,1/4,1/4", "1/4,1/4,1/4,1/4"},
      {2, "1/4,1/4,1/4,1/4", "1/4,1/4,1/4,1/4", "1/3,1/3,1/3,0"},
      {3, "1/4,1/4,1/4,1/4", "1/4,1/4,1/4,1/4", "1/2,1/2,0,0"},
      {4, "1/4,1/4,1/4,1/4", "1/4,1/4,1/4,1/4", "1,0,0,0"},
      {5, "1/4,1/4,1/4,1/4", "1/3,1/3,1/3,0", "1/3,1/3,1/3,0"},
      {6, "1/4,1/4,1/4,1/4", "1/3,1/3,1/3,0", "1/2,1/2,0,0"},
      {7, "1/4,1/4,1/4,1/4", "1/3,1/3,1/3,0", "2/3,1/6,1/6,0"},
      {8, "1/4,1/4,1/4,1/4", "1/3,1/3,1/3,0", "2/3,1/4,1/12,0"},
      {9, "1/4,1/4,1/4,1/4", "1/3,1/3,1/3,0", "3/4,1/12,1/12,1/12"},
      {10, "1/4,1/4,1/4,1/4", "3/8,3/8,1/4,0", "5/8,3/8,0,0"},
      {11, "1/4,1/4,1/4,1/4", "3/8,3/8,1/4,0", "3/4,1/8,1/8,0"},
      {12, "1/4,1/4,1/4,1/4", "2/5,3/10,3/10,0", "7/10,3/20,3/20,0"},
      {13, "1/4,1/4,1/4,1/4", "5/12,5/12,1/6,0", "2/3,1/6,1/12,1/12"},
      {14, "1/4,1/4,1/4,1/4", "1/2,1/6,1/6,1/6", "1/2,1/2,0,0"},
      {15, "1/4,1/4,1/4,1/4", "1/2,1/4,1/8,1/8", "5/8,3/8,0,0"},
      {16, "1/4,1/4,1/4,1/4", "1/2,1/4,1/4,0", "1/2,1/2,0,0"},
      {17, "1/4,1/4,1/4,1/4", "1/2,1/4,1/4,0", "2/3,1/6,1/6,0"},
      {18, "1/4,1/4,1/4,1/4", "1/2,1/4,1/4,0", "3/4,1/4,0,0"},
      {19, "1/4,1/4,1/4,1/4", "1/2,3/8,1/8,0", "5/8,1/8,1/8,1/8"},
      {20, "1/4,1/4,1/4,1/4", "1/2,1/2,0,0", "1/2,1/2,0,0"},
      {21, "2/7,2/7,2/7,1/7", "4/7,1/7,1/7,1/7", "4/7,3/7,0,0"},
      {22, "7/24,7/24,5/24,5/24", "1/3,1/3,1/3,0", "3/4,1/8,1/8,0"},
      {23, "3/10,3/10,1/5,1/5", "2/5,3/10,3/10,0", "4/5,1/10,1/10,0"},
      {24, "3/10,3/10,3/10,1/10", "1/2,1/2,0,0", "11/20,3/20,3/20,3/20"},
      {25, "3/10,3/10,3/10,1/10", "1/2,1/2,0,0", "3/5,1/5,1/10,1/10"},
      {26, "1/3,2/9,2/9,2/9", "1/3,1/3,1/3,0", "2/3,1/3,0,0"},
      {27, "1/3,2/9,2/9,2/9", "1/3,1/3,1/3,0", "7/9,1/9,1/9,0"},
      {28, "1/3,2/9,2/9,2/9", "4/9,4/9,1/9,0", "2/3,1/9,1/9,1/9"},
      {29, "1/3,1/3,1/6,1/6", "1/3,1/3,1/3,0", "7/9,1/9,1/9,0"},
      {30, "1/3,1/3,1/6,1/6", "1/3,1/3,1/3,0", "5/6,1/6,0,0"},
      {31, "1/3,1/3,1/6,1/6", "1/2,1/4,1/4,0", "3/4,1/12,1/12,1/12"},
      {32, "1/3,1/3,1/6,1/6", "2/3,1/6,1/6,0", "2/3,1/6,1/6,0"},
      {33, "1/3,1/3,1/3,0", "1/3,1/3,1/3,0", "1/3,1/3,1/3,0"},
      {34, "1/3,1/3,1/3,0", "1/3,1/3,1/3,0", "1/2,1/2,0,0"},
      {35, "1/3,1/3,1/3,0", "1/3,1/3,1/3,0", "1,0,0,0"},
      {36, "1/3,1/3,1/3,0", "2/5,1/5,1/5,1/5", "11/15,2/15,1/15,1/15"},
      {37, "1/3,1/3,1/3,0", "5/12,1/4,1/6,1/6", "3/4,1/12,1/12,1/12"},
      {38, "1/3,1/3,1/3,0", "5/12,5/12,1/12,1/12", "3/4,1/12,1/12,1/12"},
      {39, "1/3,1/3,1/3,0", "4/9,1/3,1/9,1/9", "7/9,1/9,1/9,0"},
      {40, "1/3,1/3,1/3,0", "1/2,1/6,1/6,1/6", "1/2,1/2,0,0"},
      {41, "1/3,1/3,1/3,0", "1/2,1/6,1/6,1/6", "2/3,1/9,1/9,1/9"},
      {42, "1/3,1/3,1/3,0", "1/2,1/6,1/6,1/6", "2/3,1/3,0,0"},
      {43, "1/3,1/3,1/3,0", "1/2,1/2,0,0", "1/2,1/2,0,0"},
      {44, "1/3,1/3,1/3,0", "1/2,1/2,0,0", "7/12,1/4,1/12,1/12"},
      {45, "1/3,1/3,1/3,0", "1/2,1/2,0,0", "2/3,1/6,1/6,0"},
      {46, "1/3,1/3,1/3,0", "5/9,2/9,1/9,1/9", "2/3,1/9,1/9,1/9"},
      {47, "1/3,1/3,1/3,0", "2/3,1/3,0,0", "2/3,1/3,0,0"},
      {48, "5/14,5/14,1/7,1/7", "3/7,2/7,2/7,0", "11/14,1/14,1/14,1/14"},
      {49, "4/11,4/11,3/11,0", "5/11,2/11,2/11,2/11", "8/11,1/11,1/11,1/11"},
      {50, "3/8,1/4,1/4,1/8", "1/2,1/2,0,0", "5/8,1/8,1/8,1/8"},
      {51, "3/8,3/8,1/4,0", "5/8,1/8,1/8,1/8", "5/8,1/8,1/8,1/8"},
      {52, "2/5,1/5,1/5,1/5", "2/5,2/5,1/5,0", "4/5,1/5,0,0"},
      {53, "2/5,1/5,1/5,1/5", "1/2,1/2,0,0", "3/5,1/5,1/10,1/10"},
      {54, "2/5,3/10,3/10,0", "2/5,2/5,1/10,1/10", "4/5,1/10,1/10,0"},
      {55, "2/5,2/5,1/10,1/10", "3/5,1/5,1/5,0", "7/10,1/10,1/10,1/10"},
      {56, "5/12,5/12,1/12,1/12", "1/2,1/4,1/4,0", "3/4,1/12,1/12,1/12"},
      {57, "3/7,3/7,1/7,0", "4/7,1/7,1/7,1/7", "5/7,1/7,1/7,0"},
      {58, "1/2,1/6,1/6,1/6", "1/2,1/2,0,0", "2/3,1/6,1/6,0"},
      {59, "1/2,1/4,1/4,0", "1/2,1/2,0,0", "5/8,1/8,1/8,1/8"},
      {60, "1/2,1/4,1/4,0", "1/2,1/2,0,0", "3/4,1/4,0,0"},
      {61, "1/2,1/2,0,0", "1/2,1/2,0,0", "1/2,1/2,0,0"},
      {62, "1/2,1/2,0,0", "1/2,1/2,0,0", "1,0,0,0"},
      {63, "1/2,1/2,0,0", "5/8,1/8,1/8,1/8", "5/8,1/8,1/8,1/8"},
      {64, "1/2,1/2,0,0", "2/3,1/6,1/6,0", "2/3,1/6,1/6,0"},
      {65, "1,0,0,0", "1,0,0,0", "1,0,0,0"},
  };
  return rows;
}

// rows of the (4,4,4) facet table
const std::vector<GoldenFacet>& golden_facets_444() {
  static const std::vector<GoldenFacet> rows = {
      {1, {-5,-1,3,3}, {-5,3,3,-1}, {5,1,-3,-3}, 5, true, false},
      {2, {-5,-1,3,3}, {1,-3,-3,5}, {3,3,-1,-5}, 5, false, false},
      {3, {-5,3,-1,3}, {-5,3,-1,3}, {5,1,-3,-3}, 5, true, false},
      {4, {-5,3,-1,3}, {-5,3,3,-1}, {5,-3,1,-3}, 5, true, false},
      {5, {-5,3,-1,3}, {-3,1,-3,5}, {3,3,-1,-5}, 5, true, false},
      {6, {-5,3,-1,3}, {-3,5,1,-3}, {3,-5,3,-1}, 5, true, false},
      {7, {-5,3,-1,3}, {1,-3,-3,5}, {3,-1,3,-5}, 5, false, false},
      {8, {-5,3,-1,3}, {1,-3,5,-3}, {3,-1,-5,3}, 5, false, false},
      {9, {-5,3,3,-1}, {-5,3,3,-1}, {5,-3,-3,1}, 5, true, false},
      {10, {-5,3,3,-1}, {-3,-3,1,5}, {3,3,-1,-5}, 5, true, false},
      {11, {-5,3,3,-1}, {-3,-3,5,1}, {3,3,-5,-1}, 5, true, false},
      {12, {-5,3,3,-1}, {-3,1,-3,5}, {3,-1,3,-5}, 5, true, false},
      {13, {-5,3,3,-1}, {-3,1,5,-3}, {3,-1,-5,3}, 5, true, false},
      {14, {-5,3,3,-1}, {-3,5,-3,1}, {3,-5,3,-1}, 5, true, false},
      {15, {-5,3,3,-1}, {-3,5,1,-3}, {3,-5,-1,3}, 5, true, false},
      {16, {-5,3,3,-1}, {-1,-5,3,3}, {1,5,-3,-3}, 5, true, false},
      {17, {-5,3,3,-1}, {-1,3,-5,3}, {1,-3,5,-3}, 5, true, false},
      {18, {-5,3,3,-1}, {-1,3,3,-5}, {1,-3,-3,5}, 5, true, false},
      {19, {-3,-1,3,1}, {-3,3,1,-1}, {3,1,-1,-3}, 3, true, false},
      {20, {-3,-1,3,1}, {1,-1,-3,3}, {3,1,-1,-3}, 3, false, false},
      {21, {-3,1,1,1}, {-3,1,1,1}, {3,-1,-1,-1}, 3, true, false},
      {22, {-3,1,1,1}, {-2,-2,2,2}, {2,2,-2,-2}, 3, true, false},
      {23, {-3,1,1,1}, {-2,2,-2,2}, {2,-2,2,-2}, 3, true, false},
      {24, {-3,1,1,1}, {-2,2,2,-2}, {2,-2,-2,2}, 3, true, false},
      {25, {-3,1,1,1}, {-1,-1,-1,3}, {1,1,1,-3}, 3, true, false},
      {26, {-3,1,1,1}, {-1,-1,3,-1}, {1,1,-3,1}, 3, true, false},
      {27, {-3,1,1,1}, {-1,3,-1,-1}, {1,-3,1,1}, 3, true, false},
      {28, {-3,3,1,-1}, {-3,3,1,-1}, {3,-1,-3,1}, 3, true, false},
      {29, {-3,3,1,-1}, {-1,-3,1,3}, {3,1,-1,-3}, 3, false, false},
      {30, {-3,3,1,-1}, {-1,-3,3,1}, {1,3,-1,-3}, 3, true, false},
      {31, {-3,3,1,-1}, {-1,-3,3,1}, {3,1,-3,-1}, 3, false, false},
      {32, {-3,3,1,-1}, {-1,3,1,-3}, {1,-1,-3,3}, 3, true, false},
      {33, {-2,-2,2,2}, {-2,2,2,-2}, {1,1,-3,1}, 3, true, false},
      {34, {-2,2,-2,2}, {-2,2,2,-2}, {1,-3,1,1}, 3, true, false},
      {35, {-1,-1,-1,3}, {0,0,0,0}, {0,0,0,0}, 1, true, false},
      {36, {-1,0,0,1}, {-1,1,0,0}, {1,0,0,-1}, 1, true, false},
      {37, {-1,0,0,1}, {0,0,-1,1}, {1,0,0,-1}, 1, false, false},
      {38, {-1,0,1,0}, {-1,0,1,0}, {1,0,0,-1}, 1, true, false},
      {39, {-1,0,1,0}, {-1,1,0,0}, {1,0,-1,0}, 1, true, false},
      {40, {-1,0,1,0}, {0,-1,0,1}, {1,0,0,-1}, 1, false, false},
      {41, {-1,0,1,0}, {0,-1,1,0}, {0,1,0,-1}, 1, true, false},
      {42, {-1,0,1,0}, {0,-1,1,0}, {1,0,-1,0}, 1, false, false},
      {43, {-1,0,1,0}, {0,0,-1,1}, {0,1,0,-1}, 1, true, false},
      {44, {-1,1,0,0}, {-1,1,0,0}, {1,-1,0,0}, 1, true, false},
      {45, {-1,1,0,0}, {0,-1,0,1}, {0,1,0,-1}, 1, true, false},
      {46, {-1,1,0,0}, {0,-1,1,0}, {0,1,-1,0}, 1, true, false},
      {47, {-1,1,0,0}, {0,0,-1,1}, {0,0,1,-1}, 1, true, false},
      {48, {0,0,0,0}, {0,0,0,0}, {0,0,1,-1}, 0, true, true},
      {49, {0,0,0,0}, {0,0,0,0}, {0,1,-1,0}, 0, true, true},
      {50, {0,0,0,0}, {0,0,0,0}, {1,-1,0,0}, 0, false, true},
  };
  return rows;
}

}  // namespace momentcone
