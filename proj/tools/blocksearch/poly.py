import itertools, math
from fractions import Fraction

def ccw_faces(verts, faces):
    out = []
    for f in faces:
        pts = [verts[v] for v in f]
        c = [sum(p[i] for p in pts)/len(pts) for i in range(3)]
        n = c  # outward normal for origin-centred convex polyhedra
        # pick basis in face plane
        ref = [pts[0][i]-c[i] for i in range(3)]
        def cross(a,b): return [a[1]*b[2]-a[2]*b[1], a[2]*b[0]-a[0]*b[2], a[0]*b[1]-a[1]*b[0]]
        w = cross(n, ref)
        def ang(p):
            d = [p[i]-c[i] for i in range(3)]
            return math.atan2(sum(d[i]*w[i] for i in range(3)), sum(d[i]*ref[i] for i in range(3)))
        out.append(tuple(sorted(f, key=lambda v: ang(verts[v]))))
    return out

def octahedron():
    V = [(1,0,0),(-1,0,0),(0,1,0),(0,-1,0),(0,0,1),(0,0,-1)]
    F = []
    for sx,sy,sz in itertools.product((1,-1),repeat=3):
        F.append((0 if sx>0 else 1, 2 if sy>0 else 3, 4 if sz>0 else 5))
    return dict(name='oct', verts=V, faces=ccw_faces(V,F), angle=3)

def cuboctahedron():
    V = []
    for i,j in ((0,1),(0,2),(1,2)):
        for a,b in itertools.product((1,-1),repeat=2):
            p=[0,0,0]; p[i]=a; p[j]=b; V.append(tuple(p))
    F=[]
    for s in itertools.product((1,-1),repeat=3):
        F.append(tuple(k for k,p in enumerate(V) if all(p[i]==0 or p[i]==s[i] for i in range(3))))
    for ax in range(3):
        for sg in (1,-1):
            F.append(tuple(k for k,p in enumerate(V) if p[ax]==sg))
    return dict(name='cuboct', verts=V, faces=ccw_faces(V,F), angle=3)

def tetrahedron():
    V=[(1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1)]
    F=[tuple(j for j in range(4) if j!=i) for i in range(4)]
    return dict(name='tet', verts=V, faces=ccw_faces(V,F), angle=2)

def face_maps(fa, fb):
    """orientation-reversing vertex bijections fa->fb (both ccw from outside)"""
    k=len(fa); res=[]
    for s in range(k):
        res.append({fa[i]: fb[(s-i)%k] for i in range(k)})
    return res
