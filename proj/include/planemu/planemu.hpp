#pragma once

#include <planemu/asset.hpp>
#include <planemu/constructions.hpp>
#include <planemu/covers.hpp>
#include <planemu/errors.hpp>
#include <planemu/figures.hpp>
#include <planemu/graph.hpp>
#include <planemu/io.hpp>
#include <planemu/isomorphism.hpp>
#include <planemu/maps.hpp>
#include <planemu/planarity.hpp>
#include <planemu/rotation.hpp>
#include <planemu/search.hpp>
