#ifndef AXIAL_AXIAL_HPP
#define AXIAL_AXIAL_HPP

#include "axial/field.hpp"
#include "axial/perm.hpp"
#include "axial/group.hpp"
#include "axial/graph.hpp"
#include "axial/linalg.hpp"
#include "axial/algebra.hpp"
#include "axial/structure.hpp"
#include "axial/fusion.hpp"
#include "axial/autsearch.hpp"
#include "axial/autgrp.hpp"
#include "axial/frucht.hpp"

#endif  // AXIAL_AXIAL_HPP
