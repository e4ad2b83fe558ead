import poly as P, cx, arcs, itertools
class Any:
    def __eq__(s,o): return True
    def __ne__(s,o): return False
def to_complex(G):
    T=P.tetrahedron(); polys=[T]*len(G); glue={}; bnd={}
    for t,row in enumerate(G):
        for i,g in enumerate(row):
            if g=='B': bnd[(t,i)]=0
            else:
                t2,p=g; glue[(t,i)]=(t2,p[i],{v:p[v] for v in range(4) if v!=i})
    return cx.Complex(polys,glue,bnd)
def analyse(G):
    C=to_complex(G)
    sp=C.sphere_components(); pu=C.punctures(); cu,_=C.cusps()
    r=dict(angles=C.angle_report(), spheres=[len(s) for s in sp], npunct=len(pu),
           cusps=sorted(len(c) for c in cu), chi=C.euler_truncated())
    sph_of={f:i for i,s in enumerate(sp) for f in s}
    r['deg']=sorted(tuple(sorted(len(pc) for pc in pu if sph_of[pc[0][:2]]==i)) for i in range(len(sp)))
    L={k:Any() for k in ('q0','q1','q2','q3','sheet','loop')}
    r['match']=arcs.match(C,[True,False,True,False],L)
    return C,r
if __name__=='__main__':
    import t3search, random, sys
    random.seed(int(sys.argv[1])); t3search.dfs()
    C,r=analyse(t3search.found[0])
    for k,v in r.items(): print(k,v)
