from fractions import Fraction
import poly as P

class UF:
    def __init__(s): s.p={}
    def f(s,x):
        s.p.setdefault(x,x)
        while s.p[x]!=x:
            s.p[x]=s.p[s.p[x]]; x=s.p[x]
        return x
    def u(s,a,b): s.p[s.f(a)]=s.f(b)

class Complex:
    """polys: list of shape dicts; glue: dict (p,fi)->(q,gi,map); boundary: dict (p,fi)->sphere id"""
    def __init__(s, polys, glue, boundary):
        s.polys=polys; s.glue=glue; s.bnd=boundary
        s.faces={}
        for p,sh in enumerate(polys):
            for fi,f in enumerate(sh['faces']): s.faces[(p,fi)]=f
        for k in s.faces:
            assert (k in glue) != (k in boundary), ('face status', k)
    def other_face(s,p,fi,a,b):
        for gi,g in enumerate(s.polys[p]['faces']):
            if gi!=fi and a in g and b in g:
                k=len(g); i=g.index(a)
                if g[(i+1)%k]==b or g[(i-1)%k]==b: return gi
        raise Exception
    def walk(s,p,fi,a,b,stop=None):
        """enter poly p through face fi at edge a-b; leave through the other face, repeatedly"""
        occ=[]
        cur=(p,fi,a,b)
        while True:
            occ.append(cur)
            p,fi,a,b=cur
            gi=s.other_face(p,fi,a,b)
            if (p,gi) in s.bnd:
                return occ,('bnd',(p,gi,a,b))
            q,hi,m=s.glue[(p,gi)]
            cur=(q,hi,m[a],m[b])
            if cur[0]==occ[0][0] and cur[1]==occ[0][1] and frozenset(cur[2:])==frozenset(occ[0][2:]):
                assert cur==occ[0], 'orientation'
                return occ,('closed',None)
    def edge_classes(s):
        seen=set(); res=[]
        # boundary classes first: start from boundary faces
        for (p,fi),sp in sorted(s.bnd.items()):
            f=s.faces[(p,fi)]
            for i in range(len(f)):
                a,b=f[i],f[(i+1)%len(f)]
                if (p,frozenset((a,b))) in seen: continue
                # start occurrence: edge seen from face fi being boundary: the poly edge is between fi and other face
                occ,end=s.walk(p,fi,a,b)
                for o in occ: seen.add((o[0],frozenset(o[2:])))
                res.append(dict(kind='boundary',occ=occ,start=(p,fi,a,b),end=end[1]))
        for p,sh in enumerate(s.polys):
            for fi,f in enumerate(sh['faces']):
                for i in range(len(f)):
                    a,b=f[i],f[(i+1)%len(f)]
                    if (p,frozenset((a,b))) in seen: continue
                    occ,end=s.walk(p,fi,a,b)
                    assert end[0]=='closed', end
                    for o in occ: seen.add((o[0],frozenset(o[2:])))
                    res.append(dict(kind='interior',occ=occ))
        return res
    def angle_report(s):
        bad=[]
        for ec in s.edge_classes():
            tot=sum(s.polys[o[0]]['angle'] for o in ec['occ'])  # units pi/6
            want=6 if ec['kind']=='boundary' else 12
            if tot!=want: bad.append((ec['kind'],tot,len(ec['occ'])))
        return bad
    def punctures(s):
        """boundary corner classes (p,fi,v) -> puncture id, sphere membership"""
        uf=UF()
        for ec in s.edge_classes():
            if ec['kind']!='boundary': continue
            p,fi,a,b=ec['start']; q,gi,c,d=ec['end']
            # the walk maps a->c, b->d
            uf.u((p,fi,a),(q,gi,c)); uf.u((p,fi,b),(q,gi,d))
        cls={}
        for (p,fi),sp in s.bnd.items():
            for v in s.faces[(p,fi)]:
                cls.setdefault(uf.f((p,fi,v)),[]).append((p,fi,v))
        return list(cls.values())
    def sphere_components(s):
        uf=UF()
        for k in s.bnd: uf.f(k)
        for ec in s.edge_classes():
            if ec['kind']=='boundary':
                uf.u(ec['start'][:2],ec['end'][:2])
        comps={}
        for k in s.bnd: comps.setdefault(uf.f(k),[]).append(k)
        return list(comps.values())
    def cusps(s):
        """cusp polygons (p,v); glued along faces"""
        uf=UF()
        for p,sh in enumerate(s.polys):
            for v in range(len(sh['verts'])): uf.f((p,v))
        for (p,fi),(q,gi,m) in s.glue.items():
            for v in s.faces[(p,fi)]: uf.u((p,v),(q,m[v]))
        comps={}
        for p,sh in enumerate(s.polys):
            for v in range(len(sh['verts'])): comps.setdefault(uf.f((p,v)),[]).append((p,v))
        return list(comps.values()), uf
    def euler_truncated(s):
        """chi of identification space of truncated polyhedra"""
        # cells: 3-cells = polys; 2-cells: faces (identified in pairs) + cusp polygons (one per (p,v));
        # 1-cells: original edges (edge classes) + truncation edges (p,v,face) identified via glue
        # 0-cells: (p,v,edge-end) ... truncation vertices = (p, v, edge{v,w}); identified along edge classes.
        C=len(s.polys)
        F=len(s.glue)//2+len(s.bnd)+sum(len(sh['verts']) for sh in s.polys)
        ecs=s.edge_classes()
        E1=len(ecs)
        tr=UF()
        for (p,fi),f in s.faces.items():
            for v in f: tr.f((p,fi,v))
        for (p,fi),(q,gi,m) in s.glue.items():
            for v in s.faces[(p,fi)]: tr.u((p,fi,v),(q,gi,m[v]))
        E2=len({tr.f(k) for k in tr.p})
        # vertices: (p, directed edge end) ; identified through edge class occurrences
        vu=UF()
        for ec in ecs:
            occ=ec['occ']
            # consecutive occurrences share orientation through maps: walk stores (q, face, m[a], m[b]) so a-ends align
            for o in occ:
                vu.f((o[0],frozenset(o[2:]),o[2])); vu.f((o[0],frozenset(o[2:]),o[3]))
            for o1,o2 in zip(occ,occ[1:]):
                vu.u((o1[0],frozenset(o1[2:]),o1[2]),(o2[0],frozenset(o2[2:]),o2[2]))
                vu.u((o1[0],frozenset(o1[2:]),o1[3]),(o2[0],frozenset(o2[2:]),o2[3]))
        V=len({vu.f(k) for k in vu.p})
        return V-(E1+E2)+F-C
