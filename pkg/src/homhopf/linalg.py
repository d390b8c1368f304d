"""Dense exact linear algebra: vectors, linear maps, structure tensors.

Tensor-basis convention, used by every module in this package: the basis of
V ⊗ W is ordered lexicographically, e_i ⊗ e_j having index i*dim(W) + j.
Iterated tensor factors flatten the same way, so (U ⊗ V) ⊗ W and
U ⊗ (V ⊗ W) share one index space.

Linear maps act on column vectors; composition is ``f @ g`` (apply g first).
Storage is dense, but every product skips zero entries, so the structure
tensors that arise here (which are very sparse) stay cheap.
"""

from itertools import product as iproduct

from .errors import DimensionMismatch, SingularMap


class Vec:
    """Immutable dense vector over an exact field."""

    __slots__ = ("field", "entries", "_nnz")

    def __init__(self, field, entries):
        self.field = field
        self.entries = tuple(entries)
        self._nnz = None

    @classmethod
    def from_values(cls, field, values):
        return cls(field, [field(v) for v in values])

    @classmethod
    def zeros(cls, field, dim):
        return cls(field, [field.zero] * dim)

    @classmethod
    def basis(cls, field, dim, i):
        entries = [field.zero] * dim
        entries[i] = field.one
        return cls(field, entries)

    @property
    def dim(self):
        return len(self.entries)

    def nonzero(self):
        if self._nnz is None:
            self._nnz = tuple((i, v) for i, v in enumerate(self.entries) if v)
        return self._nnz

    def is_zero(self):
        return not self.nonzero()

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other):
        self._check(other)
        return Vec(self.field, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return Vec(self.field, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Vec(self.field, [-a for a in self.entries])

    def scale(self, c):
        return Vec(self.field, [c * a for a in self.entries])

    def tensor(self, other):
        """e_i ⊗ e_j ↦ index i*other.dim + j."""
        zero = self.field.zero
        out = [zero] * (self.dim * other.dim)
        d = other.dim
        for i, a in self.nonzero():
            base = i * d
            for j, b in other.nonzero():
                out[base + j] = a * b
        return Vec(self.field, out)

    def pair(self, other):
        """Scalar pairing sum_i self[i]*other[i] (covector applied to vector)."""
        self._check(other)
        acc = self.field.zero
        for i, a in self.nonzero():
            acc = acc + a * other.entries[i]
        return acc

    def _check(self, other):
        if not isinstance(other, Vec) or other.dim != self.dim:
            raise DimensionMismatch("vector dimensions differ")

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Vec(%s)" % (list(self.entries),)


class Mat:
    """Immutable dense matrix over an exact field (row-major)."""

    __slots__ = ("field", "rows", "cols", "data", "_colnnz", "_inv", "_hash")

    def __init__(self, field, data):
        data = tuple(tuple(row) for row in data)
        self.field = field
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged matrix rows")
        self.data = data
        self._colnnz = None
        self._inv = None
        self._hash = None

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, [[field(v) for v in row] for row in rows])

    @classmethod
    def identity(cls, field, n):
        zero, one = field.zero, field.one
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, field, values):
        values = [field(v) for v in values]
        z = field.zero
        n = len(values)
        return cls(field, [[values[i] if i == j else z for j in range(n)]
                           for i in range(n)])

    @classmethod
    def from_columns(cls, field, columns, rows):
        z = field.zero
        data = [[z] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, v in col.nonzero() if isinstance(col, Vec) else enumerate(col):
                data[i][j] = v
        return cls(field, data)

    def col(self, j):
        return Vec(self.field, [self.data[i][j] for i in range(self.rows)])

    def column_nonzeros(self):
        if self._colnnz is None:
            cols = [[] for _ in range(self.cols)]
            for i, row in enumerate(self.data):
                for j, v in enumerate(row):
                    if v:
                        cols[j].append((i, v))
            self._colnnz = tuple(tuple(c) for c in cols)
        return self._colnnz

    def apply2(self, x, y):
        """Evaluate a bilinear map stored on the tensor basis of x ⊗ y."""
        if x.dim * y.dim != self.cols:
            raise DimensionMismatch(
                "bilinear map of shape %dx%d applied to dims %d, %d"
                % (self.rows, self.cols, x.dim, y.dim))
        zero = self.field.zero
        out = [zero] * self.rows
        colnnz = self.column_nonzeros()
        d = y.dim
        for i, a in x.nonzero():
            base = i * d
            for j, b in y.nonzero():
                c = a * b
                for r, m in colnnz[base + j]:
                    out[r] = out[r] + m * c
        return Vec(self.field, out)

    def apply(self, v):
        if v.dim != self.cols:
            raise DimensionMismatch(
                "map of shape %dx%d applied to vector of dim %d"
                % (self.rows, self.cols, v.dim))
        zero = self.field.zero
        out = [zero] * self.rows
        colnnz = self.column_nonzeros()
        for j, c in v.nonzero():
            for i, m in colnnz[j]:
                out[i] = out[i] + m * c
        return Vec(self.field, out)

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch("composition %dx%d @ %dx%d"
                                    % (self.rows, self.cols, other.rows, other.cols))
        zero = self.field.zero
        out = [[zero] * other.cols for _ in range(self.rows)]
        colnnz = self.column_nonzeros()
        for k, row in enumerate(other.data):
            lifted = colnnz[k]
            if not lifted:
                continue
            for j, v in enumerate(row):
                if v:
                    for i, m in lifted:
                        out[i][j] = out[i][j] + m * v
        return Mat(self.field, out)

    def __add__(self, other):
        self._samedims(other)
        return Mat(self.field, [[a + b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        self._samedims(other)
        return Mat(self.field, [[a - b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return Mat(self.field, [[-a for a in row] for row in self.data])

    def scale(self, c):
        return Mat(self.field, [[c * a for a in row] for row in self.data])

    def transpose(self):
        return Mat(self.field, [[self.data[i][j] for i in range(self.rows)]
                                for j in range(self.cols)])

    def kron(self, other):
        """(self ⊗ other) in the lexicographic tensor-basis ordering."""
        zero = self.field.zero
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [[zero] * cols for _ in range(rows)]
        for i1, row1 in enumerate(self.data):
            for j1, a in enumerate(row1):
                if not a:
                    continue
                rbase = i1 * other.rows
                cbase = j1 * other.cols
                for i2, row2 in enumerate(other.data):
                    orow = out[rbase + i2]
                    for j2, b in enumerate(row2):
                        if b:
                            orow[cbase + j2] = a * b
        return Mat(self.field, out)

    def inverse(self):
        """Exact inverse by Gaussian elimination; raises SingularMap."""
        if self.rows != self.cols:
            raise DimensionMismatch("only square maps invert")
        if self._inv is not None:
            return self._inv
        n = self.rows
        zero, one = self.field.zero, self.field.one
        a = [list(row) for row in self.data]
        b = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col]:
                    piv = r
                    break
            if piv is None:
                raise SingularMap("rank-deficient %dx%d map" % (n, n))
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                b[col], b[piv] = b[piv], b[col]
            p = a[col][col]
            if p != one:
                inv = one / p
                a[col] = [x * inv for x in a[col]]
                b[col] = [x * inv for x in b[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                    b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        result = Mat(self.field, b)
        self._inv = result
        result._inv = self
        return result

    def power(self, k):
        """self composed with itself k times; negative k uses the inverse."""
        if k == 0:
            return Mat.identity(self.field, self.rows)
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out @ base
        return out

    def is_identity(self):
        if self.rows != self.cols:
            return False
        zero, one = self.field.zero, self.field.one
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v != (one if i == j else zero):
                    return False
        return True

    def is_zero(self):
        return all(not v for row in self.data for v in row)

    def _samedims(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix shapes differ")

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.data)
        return self._hash

    def __repr__(self):
        return "Mat(%dx%d)" % (self.rows, self.cols)


def invert_linear_map(m):
    """Exact inverse of a square map; raises SingularMap if rank deficient."""
    return m.inverse()


def kron(f, g):
    return f.kron(g)


def permute_legs(field, dims, order):
    """Permutation matrix reordering tensor legs.

    ``order`` lists, for each output leg, which input leg it carries:
    e_{i_0} ⊗ ... ⊗ e_{i_{n-1}}  ↦  e_{i_{order[0]}} ⊗ ... ⊗ e_{i_{order[n-1]}}.
    """
    n = len(dims)
    if sorted(order) != list(range(n)):
        raise DimensionMismatch("not a permutation of legs: %r" % (order,))
    out_dims = [dims[k] for k in order]
    total = 1
    for d in dims:
        total *= d
    zero, one = field.zero, field.one
    data = [[zero] * total for _ in range(total)]
    for idx in iproduct(*[range(d) for d in dims]):
        src = 0
        for d, i in zip(dims, idx):
            src = src * d + i
        dst = 0
        for d, k in zip(out_dims, order):
            dst = dst * d + idx[k]
        data[dst][src] = one
    return Mat(field, data)


def flip_matrix(field, d1, d2):
    """The flip V1 ⊗ V2 → V2 ⊗ V1."""
    return permute_legs(field, [d1, d2], [1, 0])


def block_diag(a, b):
    """The direct-sum map on the concatenated basis of two spaces."""
    field = a.field
    zero = field.zero
    rows = a.rows + b.rows
    cols = a.cols + b.cols
    out = [[zero] * cols for _ in range(rows)]
    for i, row in enumerate(a.data):
        for j, v in enumerate(row):
            out[i][j] = v
    for i, row in enumerate(b.data):
        for j, v in enumerate(row):
            out[a.rows + i][a.cols + j] = v
    return Mat(field, out)


class MulTensor:
    """Structure constants of a bilinear product V ⊗ V → V.

    Stored as the dim x dim^2 matrix on the tensor basis; c(i, j) is the
    product of the i-th and j-th basis vectors.
    """

    __slots__ = ("mat", "dim")

    def __init__(self, mat):
        if mat.cols != mat.rows * mat.rows:
            raise DimensionMismatch(
                "product tensor must map dim^2 to dim, got %dx%d"
                % (mat.rows, mat.cols))
        self.mat = mat
        self.dim = mat.rows

    @classmethod
    def from_table(cls, field, table):
        """table[i][j] = coefficients of e_i * e_j."""
        dim = len(table)
        zero = field.zero
        data = [[zero] * (dim * dim) for _ in range(dim)]
        for i in range(dim):
            if len(table[i]) != dim:
                raise DimensionMismatch("ragged product table")
            for j in range(dim):
                col = [field(v) for v in table[i][j]]
                if len(col) != dim:
                    raise DimensionMismatch("ragged product table")
                for k, v in enumerate(col):
                    data[k][i * dim + j] = v
        return cls(Mat(field, data))

    @property
    def field(self):
        return self.mat.field

    def c(self, i, j):
        return self.mat.col(i * self.dim + j)

    def table(self):
        return tuple(tuple(self.c(i, j).entries for j in range(self.dim))
                     for i in range(self.dim))

    def apply2(self, x, y):
        """Product of two vectors by bilinearity."""
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatch("vectors do not match product tensor")
        zero = self.field.zero
        out = [zero] * self.dim
        colnnz = self.mat.column_nonzeros()
        d = self.dim
        for i, a in x.nonzero():
            base = i * d
            for j, b in y.nonzero():
                c = a * b
                for r, m in colnnz[base + j]:
                    out[r] = out[r] + m * c
        return Vec(self.field, out)

    def __eq__(self, other):
        if not isinstance(other, MulTensor):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return "MulTensor(dim=%d)" % self.dim


class CoTensor:
    """Structure constants of a coproduct V → V ⊗ V.

    Stored as the dim^2 x dim matrix; d(i) expands the i-th basis vector
    on the tensor basis.
    """

    __slots__ = ("mat", "dim")

    def __init__(self, mat):
        if mat.rows != mat.cols * mat.cols:
            raise DimensionMismatch(
                "coproduct tensor must map dim to dim^2, got %dx%d"
                % (mat.rows, mat.cols))
        self.mat = mat
        self.dim = mat.cols

    @classmethod
    def from_table(cls, field, table):
        """table[i][j][k] = coefficient of e_j ⊗ e_k in the image of e_i."""
        dim = len(table)
        zero = field.zero
        data = [[zero] * dim for _ in range(dim * dim)]
        for i in range(dim):
            if len(table[i]) != dim:
                raise DimensionMismatch("ragged coproduct table")
            for j in range(dim):
                if len(table[i][j]) != dim:
                    raise DimensionMismatch("ragged coproduct table")
                for k in range(dim):
                    data[j * dim + k][i] = field(table[i][j][k])
        return cls(Mat(field, data))

    @property
    def field(self):
        return self.mat.field

    def d(self, i):
        return self.mat.col(i)

    def table(self):
        dim = self.dim
        return tuple(
            tuple(tuple(self.mat.data[j * dim + k][i] for k in range(dim))
                  for j in range(dim))
            for i in range(dim))

    def apply(self, x):
        return self.mat.apply(x)

    def __eq__(self, other):
        if not isinstance(other, CoTensor):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return "CoTensor(dim=%d)" % self.dim


def contract(t, *vectors):
    """Evaluate a structure tensor on vectors by multilinearity.

    MulTensor takes two vectors and yields their product; CoTensor takes one
    vector and yields its expansion on the tensor basis.
    """
    if isinstance(t, MulTensor):
        if len(vectors) != 2:
            raise DimensionMismatch("product tensor contracts two vectors")
        return t.apply2(*vectors)
    if isinstance(t, CoTensor):
        if len(vectors) != 1:
            raise DimensionMismatch("coproduct tensor contracts one vector")
        return t.apply(vectors[0])
    raise TypeError("contract expects a MulTensor or CoTensor")
