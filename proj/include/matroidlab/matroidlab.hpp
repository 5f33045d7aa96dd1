#ifndef MATROIDLAB_MATROIDLAB_HPP
#define MATROIDLAB_MATROIDLAB_HPP

#include "matroidlab/axioms.hpp"
#include "matroidlab/backends.hpp"
#include "matroidlab/chroma.hpp"
#include "matroidlab/constructions.hpp"
#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/exchange.hpp"
#include "matroidlab/games.hpp"
#include "matroidlab/json_io.hpp"
#include "matroidlab/kruskal_katona.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/necklace.hpp"
#include "matroidlab/rank_table.hpp"
#include "matroidlab/rational.hpp"
#include "matroidlab/simplicial.hpp"
#include "matroidlab/union.hpp"

#endif
